#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zeroset/crofton.hpp"
#include "zeroset/execution.hpp"
#include "zeroset/polynomial.hpp"

namespace zeroset {

/// One member of the family x_1 x_2 ... x_d - 1/n on the unit cube.
struct ExperimentRow {
  std::uint64_t n = 0;
  std::size_t dimension = 0;
  double crofton_total = 0.0;
  double crofton_error_halfwidth = 0.0;
  std::optional<double> direct_measure;  // d <= 3
  Rational theorem_bound;
  /// theorem_bound - max(crofton_total, direct_measure).
  double gap = 0.0;
};

Polynomial sharpness_polynomial(std::size_t dimension, std::uint64_t n);

/// {4, 16, 64, 256, 1024} for d = 2, {8, 64, 512} otherwise.
std::vector<std::uint64_t> default_sharpness_n(std::size_t dimension);

/// Rows in the order of `n_values`, which must be strictly increasing and
/// positive; d >= 2.
std::vector<ExperimentRow> sharpness_experiment(std::size_t dimension,
                                                std::span<const std::uint64_t> n_values,
                                                std::size_t resolution,
                                                const IntegrationScheme& scheme,
                                                const ExecutionConfig& exec = {});

}  // namespace zeroset
