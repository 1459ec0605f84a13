#include "zeroset/experiments.hpp"

#include <algorithm>

#include "zeroset/box.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/marching.hpp"

namespace zeroset {

Polynomial sharpness_polynomial(std::size_t dimension, std::uint64_t n) {
  if (dimension < 1) throw DomainError("dimension must be positive");
  if (n < 1) throw DomainError("n must be positive");
  Polynomial::TermMap terms;
  terms.emplace(Exponent(dimension, 1), Rational(1));
  terms.emplace(Exponent(dimension, 0),
                Rational(Integer(-1), Integer(static_cast<unsigned long>(n))));
  return Polynomial::from_terms(dimension, std::move(terms));
}

std::vector<std::uint64_t> default_sharpness_n(std::size_t dimension) {
  if (dimension == 2) return {4, 16, 64, 256, 1024};
  return {8, 64, 512};
}

std::vector<ExperimentRow> sharpness_experiment(std::size_t dimension,
                                                std::span<const std::uint64_t> n_values,
                                                std::size_t resolution,
                                                const IntegrationScheme& scheme,
                                                const ExecutionConfig& exec) {
  if (dimension < 2) throw DomainError("sharpness experiment needs dimension >= 2");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw DomainError("n values must be positive");
    if (i > 0 && n_values[i] <= n_values[i - 1])
      throw DomainError("n values must be strictly increasing");
  }
  const Box cube = Box::cube(dimension, 0, 1);
  std::vector<ExperimentRow> rows;
  rows.reserve(n_values.size());
  for (std::uint64_t n : n_values) {
    const Polynomial p = sharpness_polynomial(dimension, n);
    ExperimentRow row;
    row.n = n;
    row.dimension = dimension;
    row.theorem_bound = theorem_bound(p, cube);
    const CroftonResult crofton = crofton_upper_estimate(p, cube, scheme, exec);
    row.crofton_total = crofton.total;
    row.crofton_error_halfwidth = crofton.total_error_halfwidth;
    double best = crofton.total;
    if (dimension <= 3) {
      row.direct_measure = direct_measure(p, cube, resolution, exec).value;
      best = std::max(best, *row.direct_measure);
    }
    row.gap = row.theorem_bound.get_d() - best;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zeroset
