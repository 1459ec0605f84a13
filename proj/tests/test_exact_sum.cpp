#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include <gmpxx.h>

#include "zeroset/exact_sum.hpp"

using zeroset::ExactSum;

namespace {

std::vector<double> awkward_values(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> ex(-60, 60);
  for (auto& x : v) x = std::ldexp(mant(rng), ex(rng));
  v.push_back(1e30);
  v.push_back(-1e30);
  v.push_back(std::ldexp(1.0, -1070));
  return v;
}

double sum_of(const std::vector<double>& v) {
  ExactSum s;
  for (double x : v) s.add(x);
  return s.value();
}

}  // namespace

TEST(ExactSum, EmptyIsZero) { EXPECT_EQ(ExactSum{}.value(), 0.0); }

TEST(ExactSum, SmallIntegersAreExact) {
  ExactSum s;
  for (int i = 1; i <= 1000; ++i) s.add(i);
  EXPECT_EQ(s.value(), 500500.0);
  s.add(-500500.0);
  EXPECT_EQ(s.value(), 0.0);
  for (int i = 1; i <= 1000; ++i) s.add(-i);
  EXPECT_EQ(s.value(), -500500.0);
}

TEST(ExactSum, NegativeTotals) {
  ExactSum s;
  s.add(-0.1);
  EXPECT_EQ(s.value(), -0.1);
  s.add(1e-200);
  s.add(-1e-200);
  s.add(-3.0);
  EXPECT_EQ(s.value(), -3.1);
}

TEST(ExactSum, CancellationKeepsTinyTerms) {
  ExactSum s;
  s.add(1e300);
  s.add(3.5e-300);
  s.add(-1e300);
  EXPECT_EQ(s.value(), 3.5e-300);
}

TEST(ExactSum, OrderIndependent) {
  std::mt19937_64 rng(8);
  auto v = awkward_values(rng, 5000);
  const double ref = sum_of(v);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(sum_of(v)), std::bit_cast<std::uint64_t>(ref));
  }
}

TEST(ExactSum, MergeEqualsSequential) {
  std::mt19937_64 rng(9);
  const auto v = awkward_values(rng, 3000);
  for (std::size_t parts : {2u, 3u, 7u}) {
    std::vector<ExactSum> partial(parts);
    for (std::size_t i = 0; i < v.size(); ++i) partial[i % parts].add(v[i]);
    ExactSum total;
    for (auto it = partial.rbegin(); it != partial.rend(); ++it) total.merge(*it);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(total.value()), std::bit_cast<std::uint64_t>(sum_of(v)));
  }
}

TEST(ExactSum, CloseToExactRationalSum) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = awkward_values(rng, 400);
    mpq_class exact = 0;
    for (double x : v) exact += mpq_class(x);
    const double got = sum_of(v);
    const double want = exact.get_d();
    EXPECT_LE(std::fabs(got - want), 4 * std::fabs(want) * 0x1p-52 + 0x1p-1074);
  }
}
