#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "zeroset/box.hpp"
#include "zeroset/execution.hpp"
#include "zeroset/polynomial.hpp"
#include "zeroset/sturm.hpp"

namespace zeroset {

/// Midpoint rule with `points_per_axis` points on every axis of the projected box.
struct GridScheme {
  std::size_t points_per_axis = 256;
};

/// Uniform base points drawn from a counter-based generator: sample i of axis k
/// depends only on (seed, k, i).
struct MonteCarloScheme {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 20240601;
  double confidence = 0.95;
};

using IntegrationScheme = std::variant<GridScheme, MonteCarloScheme>;

/// Throws DomainError if the scheme parameters are out of range.
void validate(const IntegrationScheme& scheme);

/// One direction's integral of the per-line distinct-root count over the
/// projected box. Lines on which p vanishes identically contribute nothing
/// and are tallied in `degenerate_lines_hit`.
struct AxisEstimate {
  std::size_t axis = 0;
  double estimate = 0.0;
  /// 0 for Grid; Hoeffding half-width at the requested confidence for Monte Carlo.
  double error_halfwidth = 0.0;
  std::size_t degenerate_lines_hit = 0;
  std::size_t lines_sampled = 0;
  /// Largest Finite count seen on any sampled line.
  std::size_t max_line_count = 0;
  /// Sum of Finite counts over all sampled lines.
  std::uint64_t count_sum = 0;
  /// estimate as an exact rational: projected volume * count_sum / lines_sampled.
  Rational exact_estimate;
  /// Largest spacing between neighbouring grid midpoints (Grid only).
  std::optional<Rational> grid_spacing;
};

struct CroftonResult {
  std::vector<AxisEstimate> per_axis;
  double total = 0.0;
  double total_error_halfwidth = 0.0;
  Rational exact_total;
  /// Present when the box is a cube.
  std::optional<Rational> theorem_bound;
};

/// (sum_k deg_{x_k} p) * (b - a)^(d-1). Throws TrivialPolynomialError for
/// p == 0 and DomainError for a non-cube box.
Rational theorem_bound(const Polynomial& p, const Box& cube);

/// Distinct roots of p on the segment through `base` parallel to axis k,
/// restricted to [a_k, b_k]. `base` has d-1 coordinates and must lie in the
/// projected box.
RootCount line_count(const Polynomial& p, const Box& box, std::size_t k,
                     std::span<const Rational> base);

/// Grid: base point of line `index` (row-major over the projected axes).
std::vector<Rational> grid_base_point(const Box& box, std::size_t k, std::size_t points_per_axis,
                                      std::uint64_t index);
/// Monte Carlo: base point of sample `index`. Each coordinate is the dyadic
/// rational a + (b-a)(2m+1)/2^33 with m a 32-bit counter-hash output.
std::vector<Rational> monte_carlo_base_point(const Box& box, std::size_t k, std::uint64_t seed,
                                             std::uint64_t index);

/// Number of lines a scheme samples on axis k (N^(d-1) for Grid).
std::uint64_t lines_for_scheme(const Box& box, const IntegrationScheme& scheme);

AxisEstimate crofton_axis_integral(const Polynomial& p, const Box& box, std::size_t k,
                                   const IntegrationScheme& scheme,
                                   const ExecutionConfig& exec = {});

CroftonResult crofton_upper_estimate(const Polynomial& p, const Box& box,
                                     const IntegrationScheme& scheme,
                                     const ExecutionConfig& exec = {});

namespace detail {
/// Finishes an AxisEstimate from raw tallies (shared with the serial reference).
AxisEstimate finish_axis(const Polynomial& p, const Box& box, std::size_t k,
                         const IntegrationScheme& scheme, std::uint64_t lines,
                         std::uint64_t count_sum, std::size_t max_count, std::size_t degenerate);
CroftonResult combine_axes(const Polynomial& p, const Box& box, std::vector<AxisEstimate> axes);
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t axis, std::uint64_t index,
                           std::uint64_t coord);
}  // namespace detail

namespace reference {
/// Straight sequential loops over the same line set; kept as the baseline the
/// OpenMP kernels are tested and benchmarked against.
AxisEstimate crofton_axis_integral_serial(const Polynomial& p, const Box& box, std::size_t k,
                                          const IntegrationScheme& scheme);
CroftonResult crofton_upper_estimate_serial(const Polynomial& p, const Box& box,
                                            const IntegrationScheme& scheme);
}  // namespace reference

}  // namespace zeroset
