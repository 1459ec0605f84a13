#include <benchmark/benchmark.h>

#include "zeroset/crofton.hpp"
#include "zeroset/marching.hpp"

using namespace zeroset;

namespace {

const Polynomial& curve() {
  static const Polynomial p = parse_polynomial("x1^3 - x1*x2 + 1/5*x2^2 - 1/9", 2);
  return p;
}

const Polynomial& surface() {
  static const Polynomial p = parse_polynomial("x1*x2*x3 - 1/64", 3);
  return p;
}

const Box unit2 = Box::cube(2, 0, 1);
const Box unit3 = Box::cube(3, 0, 1);

void BM_CroftonSerial(benchmark::State& state) {
  const GridScheme s{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::crofton_upper_estimate_serial(curve(), unit2, s).total);
}

void BM_CroftonParallel(benchmark::State& state) {
  const GridScheme s{static_cast<std::size_t>(state.range(0))};
  const ExecutionConfig exec{static_cast<int>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(crofton_upper_estimate(curve(), unit2, s, exec).total);
}

void BM_SquaresSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::marching_squares_length_serial(curve(), unit2, n).value);
}

void BM_SquaresParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExecutionConfig exec{static_cast<int>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(marching_squares_length(curve(), unit2, n, exec).value);
}

void BM_CubesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::marching_cubes_area_serial(surface(), unit3, n).value);
}

void BM_CubesParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExecutionConfig exec{static_cast<int>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(marching_cubes_area(surface(), unit3, n, exec).value);
}

}  // namespace

BENCHMARK(BM_CroftonSerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CroftonParallel)->Args({256, 1})->Args({256, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquaresSerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquaresParallel)->Args({256, 1})->Args({256, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubesSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubesParallel)->Args({32, 1})->Args({32, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
