#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/experiments.hpp"

using namespace zeroset;

TEST(Sharpness, PolynomialFamily) {
  EXPECT_EQ(sharpness_polynomial(2, 4), parse_polynomial("x1*x2 - 1/4", 2));
  EXPECT_EQ(sharpness_polynomial(4, 10), parse_polynomial("x1*x2*x3*x4 - 0.1", 4));
  EXPECT_EQ(default_sharpness_n(2), (std::vector<std::uint64_t>{4, 16, 64, 256, 1024}));
  EXPECT_EQ(default_sharpness_n(3), (std::vector<std::uint64_t>{8, 64, 512}));
}

TEST(Sharpness, CornerPointCase) {
  const std::vector<std::uint64_t> n{1};
  const auto rows = sharpness_experiment(2, n, 64, GridScheme{64});
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_TRUE(rows[0].direct_measure.has_value());
  EXPECT_EQ(*rows[0].direct_measure, 0.0);
  EXPECT_EQ(rows[0].theorem_bound, 2);
  EXPECT_EQ(rows[0].crofton_total, 0.0);
}

TEST(Sharpness, TwoDimensionalRowsTrackArcLength) {
  const auto n = default_sharpness_n(2);
  const auto rows = sharpness_experiment(2, n, 1024, GridScheme{256});
  ASSERT_EQ(rows.size(), n.size());
  double prev_measure = 0, prev_gap = 3;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    EXPECT_EQ(r.n, n[i]);
    EXPECT_EQ(r.theorem_bound, 2);
    const double oracle = oracle::hyperbola_length(1.0 / static_cast<double>(n[i]));
    ASSERT_TRUE(r.direct_measure.has_value());
    EXPECT_LE(std::fabs(*r.direct_measure - oracle) / oracle, 0.01) << n[i];
    EXPECT_GT(*r.direct_measure, prev_measure);
    EXPECT_LE(r.gap, prev_gap);
    EXPECT_GE(r.gap, -r.crofton_error_halfwidth);
    EXPECT_DOUBLE_EQ(r.gap, 2.0 - std::max(r.crofton_total, *r.direct_measure));
    prev_measure = *r.direct_measure;
    prev_gap = r.gap;
  }
}

TEST(Sharpness, HighDimensionUsesCroftonOnly) {
  const std::vector<std::uint64_t> n{2, 8};
  const auto rows = sharpness_experiment(4, n, 0, MonteCarloScheme{2000, 3, 0.95});
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.direct_measure.has_value());
    EXPECT_EQ(r.theorem_bound, 4);
    EXPECT_GT(r.crofton_error_halfwidth, 0.0);
    EXPECT_LE(r.crofton_total - r.crofton_error_halfwidth, 4.0);
  }
}

TEST(Sharpness, RejectsBadInput) {
  const std::vector<std::uint64_t> unsorted{4, 2};
  const std::vector<std::uint64_t> zero{0, 2};
  const std::vector<std::uint64_t> ok{2};
  EXPECT_THROW(sharpness_experiment(2, unsorted, 16, GridScheme{16}), DomainError);
  EXPECT_THROW(sharpness_experiment(2, zero, 16, GridScheme{16}), DomainError);
  EXPECT_THROW(sharpness_experiment(1, ok, 16, GridScheme{16}), DomainError);
}
