#include "zeroset/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "zeroset/errors.hpp"

namespace zeroset {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void check_nontrivial(const Polynomial& p, const char* what) {
  if (p.is_trivial()) throw TrivialPolynomialError(what);
}

void check_box(const Polynomial& p, const Box& box) {
  if (box.dimension() != p.dimension())
    throw DomainError("box dimension " + std::to_string(box.dimension()) +
                      " does not match polynomial dimension " + std::to_string(p.dimension()));
}

RootCount line_count_unchecked(const Polynomial& p, const Box& box, std::size_t k,
                               std::span<const Rational> base) {
  return count_real_roots(restrict_to_line(p, k, base), box.lower(k), box.upper(k));
}

int resolve_workers(const ExecutionConfig& exec) {
  return exec.workers > 0 ? exec.workers : omp_get_max_threads();
}

}  // namespace

void validate(const IntegrationScheme& scheme) {
  if (const auto* g = std::get_if<GridScheme>(&scheme)) {
    if (g->points_per_axis < 1) throw DomainError("grid scheme needs at least one point per axis");
  } else {
    const auto& mc = std::get<MonteCarloScheme>(scheme);
    if (mc.samples < 1) throw DomainError("Monte Carlo scheme needs at least one sample");
    if (!(mc.confidence > 0.0 && mc.confidence < 1.0))
      throw DomainError("Monte Carlo confidence must lie in (0, 1)");
  }
}

Rational theorem_bound(const Polynomial& p, const Box& cube) {
  check_nontrivial(p, "theorem_bound");
  check_box(p, cube);
  if (!cube.is_cube()) throw DomainError("theorem_bound is defined for cubes only");
  unsigned long degree_sum = 0;
  for (std::size_t k = 1; k <= p.dimension(); ++k) degree_sum += degree_in_variable(p, k);
  Rational side_power = 1;
  const Rational side = cube.side(1);
  for (std::size_t i = 1; i < p.dimension(); ++i) side_power *= side;
  return Rational(degree_sum) * side_power;
}

RootCount line_count(const Polynomial& p, const Box& box, std::size_t k,
                     std::span<const Rational> base) {
  check_box(p, box);
  if (k < 1 || k > p.dimension()) throw DomainError("axis index out of range");
  if (base.size() + 1 != p.dimension()) throw DomainError("line base has wrong dimension");
  const auto projected = box.projected_intervals(k);
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i] < projected[i].first || base[i] > projected[i].second)
      throw DomainError("line base lies outside the projected box");
  return line_count_unchecked(p, box, k, base);
}

std::vector<Rational> grid_base_point(const Box& box, std::size_t k, std::size_t points_per_axis,
                                      std::uint64_t index) {
  const auto projected = box.projected_intervals(k);
  std::vector<Rational> base(projected.size());
  const Rational denom(Integer(2) * Integer(static_cast<unsigned long>(points_per_axis)));
  for (std::size_t i = projected.size(); i-- > 0;) {
    const std::uint64_t j = index % points_per_axis;
    index /= points_per_axis;
    const auto& [a, b] = projected[i];
    base[i] = a + (b - a) * Rational(Integer(static_cast<unsigned long>(2 * j + 1))) / denom;
  }
  return base;
}

std::vector<Rational> monte_carlo_base_point(const Box& box, std::size_t k, std::uint64_t seed,
                                             std::uint64_t index) {
  const auto projected = box.projected_intervals(k);
  std::vector<Rational> base(projected.size());
  Integer two33;
  mpz_ui_pow_ui(two33.get_mpz_t(), 2, 33);
  for (std::size_t i = 0; i < projected.size(); ++i) {
    const std::uint64_t m = detail::counter_hash(seed, k, index, i) >> 32;
    Rational u(Integer(static_cast<unsigned long>(2 * m + 1)), two33);
    u.canonicalize();
    const auto& [a, b] = projected[i];
    base[i] = a + (b - a) * u;
  }
  return base;
}

std::uint64_t lines_for_scheme(const Box& box, const IntegrationScheme& scheme) {
  if (box.dimension() == 1) return 1;
  if (const auto* g = std::get_if<GridScheme>(&scheme)) {
    std::uint64_t lines = 1;
    for (std::size_t i = 1; i < box.dimension(); ++i) {
      if (lines > std::numeric_limits<std::uint64_t>::max() / g->points_per_axis)
        throw DomainError("grid has too many lines");
      lines *= g->points_per_axis;
    }
    return lines;
  }
  return std::get<MonteCarloScheme>(scheme).samples;
}

namespace detail {

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t axis, std::uint64_t index,
                           std::uint64_t coord) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ axis);
  h = splitmix64(h ^ index);
  return splitmix64(h ^ coord);
}

AxisEstimate finish_axis(const Polynomial& p, const Box& box, std::size_t k,
                         const IntegrationScheme& scheme, std::uint64_t lines,
                         std::uint64_t count_sum, std::size_t max_count, std::size_t degenerate) {
  AxisEstimate est;
  est.axis = k;
  est.lines_sampled = lines;
  est.count_sum = count_sum;
  est.max_line_count = max_count;
  est.degenerate_lines_hit = degenerate;
  const Rational volume = box.projected_volume(k);
  est.exact_estimate = volume * Rational(Integer(static_cast<unsigned long>(count_sum))) /
                       Rational(Integer(static_cast<unsigned long>(lines)));
  est.estimate = est.exact_estimate.get_d();
  if (box.dimension() == 1) return est;
  if (const auto* g = std::get_if<GridScheme>(&scheme)) {
    Rational spacing = 0;
    for (const auto& [a, b] : box.projected_intervals(k))
      spacing = std::max(spacing, Rational((b - a) / Rational(Integer(static_cast<unsigned long>(g->points_per_axis)))));
    est.grid_spacing = spacing;
  } else {
    const auto& mc = std::get<MonteCarloScheme>(scheme);
    const double range = static_cast<double>(degree_in_variable(p, k)) * volume.get_d();
    est.error_halfwidth =
        range * std::sqrt(std::log(2.0 / (1.0 - mc.confidence)) / (2.0 * static_cast<double>(lines)));
  }
  return est;
}

CroftonResult combine_axes(const Polynomial& p, const Box& box, std::vector<AxisEstimate> axes) {
  CroftonResult result;
  result.exact_total = 0;
  for (const auto& a : axes) {
    result.exact_total += a.exact_estimate;
    result.total_error_halfwidth += a.error_halfwidth;
  }
  result.total = result.exact_total.get_d();
  result.per_axis = std::move(axes);
  if (box.is_cube()) result.theorem_bound = theorem_bound(p, box);
  return result;
}

}  // namespace detail

AxisEstimate crofton_axis_integral(const Polynomial& p, const Box& box, std::size_t k,
                                   const IntegrationScheme& scheme, const ExecutionConfig& exec) {
  check_nontrivial(p, "crofton_axis_integral");
  check_box(p, box);
  if (k < 1 || k > p.dimension()) throw DomainError("axis index out of range");
  validate(scheme);

  const std::uint64_t lines = lines_for_scheme(box, scheme);
  const auto* grid = std::get_if<GridScheme>(&scheme);
  const auto* mc = std::get_if<MonteCarloScheme>(&scheme);

  std::uint64_t count_sum = 0;
  std::size_t max_count = 0;
  std::size_t degenerate = 0;
  const auto n = static_cast<std::int64_t>(lines);

  // Integer tallies: the reduction is exact, so any thread count and any
  // schedule produce the same totals.
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_workers(exec)) \
    reduction(+ : count_sum, degenerate) reduction(max : max_count)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    std::vector<Rational> base;
    if (p.dimension() > 1)
      base = grid ? grid_base_point(box, k, grid->points_per_axis, idx)
                  : monte_carlo_base_point(box, k, mc->seed, idx);
    const RootCount rc = line_count_unchecked(p, box, k, base);
    if (rc.is_identically_zero()) {
      ++degenerate;
    } else {
      count_sum += rc.count();
      max_count = std::max(max_count, rc.count());
    }
  }
  return detail::finish_axis(p, box, k, scheme, lines, count_sum, max_count, degenerate);
}

CroftonResult crofton_upper_estimate(const Polynomial& p, const Box& box,
                                     const IntegrationScheme& scheme, const ExecutionConfig& exec) {
  check_nontrivial(p, "crofton_upper_estimate");
  check_box(p, box);
  std::vector<AxisEstimate> axes;
  for (std::size_t k = 1; k <= p.dimension(); ++k)
    axes.push_back(crofton_axis_integral(p, box, k, scheme, exec));
  return detail::combine_axes(p, box, std::move(axes));
}

}  // namespace zeroset
