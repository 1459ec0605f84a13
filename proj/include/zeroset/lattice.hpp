#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zeroset/box.hpp"
#include "zeroset/polynomial.hpp"

namespace zeroset {

/// Exact evaluation of a polynomial on the half-step lattice of a uniform
/// grid with N cells per axis: point j (0 <= j_k <= 2N) has coordinates
/// x_k = a_k + j_k (b_k - a_k) / (2N). Even indices are grid vertices, odd
/// ones are cell, face and edge centres.
///
/// The value is computed exactly in integers over a common denominator and
/// then converted to double by GMP's truncating conversion, so the returned
/// double is a function of the exact rational p(x) alone. Two polynomials
/// that agree as functions on their lattices (e.g. p and its translate on a
/// translated box) produce bit-identical samples. Safe to call concurrently.
class LatticeEvaluator {
 public:
  LatticeEvaluator(const Polynomial& p, const Box& box, std::size_t cells_per_axis);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t cells_per_axis() const noexcept { return cells_; }

  double value(std::span<const std::size_t> half_index) const;
  int sign(std::span<const std::size_t> half_index) const;
  Rational coordinate(std::size_t axis0, std::size_t half_index) const;

 private:
  struct Term {
    Integer weight;
    std::vector<unsigned> exponent;
  };
  void accumulate(std::span<const std::size_t> half_index, Integer& sum, Integer& tmp) const;

  std::size_t dim_;
  std::size_t cells_;
  std::vector<Term> terms_;
  Integer denominator_;
  // powers_[k][j * (max_exp_[k] + 1) + e] = X_k(j)^e
  std::vector<std::vector<Integer>> powers_;
  std::vector<unsigned> max_exp_;
  std::vector<Rational> lower_;
  std::vector<Rational> half_step_;
};

}  // namespace zeroset
