#include "zeroset/lattice.hpp"

#include <algorithm>

#include "zeroset/errors.hpp"

namespace zeroset {

LatticeEvaluator::LatticeEvaluator(const Polynomial& p, const Box& box, std::size_t cells_per_axis)
    : dim_(p.dimension()), cells_(cells_per_axis) {
  if (box.dimension() != dim_) throw DomainError("box and polynomial dimensions differ");
  if (cells_ == 0) throw DomainError("lattice needs at least one cell per axis");

  Integer common = 1;
  for (std::size_t k = 1; k <= dim_; ++k) {
    lower_.push_back(box.lower(k));
    half_step_.push_back(box.side(k) / Rational(Integer(static_cast<unsigned long>(2 * cells_))));
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), lower_.back().get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), half_step_.back().get_den_mpz_t());
  }

  Integer coeff_lcm = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(coeff_lcm.get_mpz_t(), coeff_lcm.get_mpz_t(), c.get_den_mpz_t());

  const unsigned total = p.total_degree();
  max_exp_.assign(dim_, 0);
  for (const auto& [e, c] : p.terms()) {
    unsigned deg = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      deg += e[k];
      max_exp_[k] = std::max(max_exp_[k], e[k]);
    }
    Term t;
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), common.get_mpz_t(), total - deg);
    t.weight = c.get_num() * (coeff_lcm / c.get_den()) * scale;
    t.exponent = e;
    terms_.push_back(std::move(t));
  }
  Integer dpow;
  mpz_pow_ui(dpow.get_mpz_t(), common.get_mpz_t(), total);
  denominator_ = coeff_lcm * dpow;

  powers_.resize(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const std::size_t stride = max_exp_[k] + 1;
    powers_[k].resize((2 * cells_ + 1) * stride);
    const Integer base = Rational(lower_[k] * Rational(common)).get_num();
    const Integer step = Rational(half_step_[k] * Rational(common)).get_num();
    for (std::size_t j = 0; j <= 2 * cells_; ++j) {
      const Integer x = base + step * Integer(static_cast<unsigned long>(j));
      Integer acc = 1;
      for (std::size_t e = 0; e < stride; ++e) {
        powers_[k][j * stride + e] = acc;
        acc *= x;
      }
    }
  }
}

void LatticeEvaluator::accumulate(std::span<const std::size_t> half_index, Integer& sum,
                                  Integer& tmp) const {
  sum = 0;
  for (const auto& t : terms_) {
    tmp = t.weight;
    for (std::size_t k = 0; k < dim_; ++k) {
      const unsigned e = t.exponent[k];
      if (e == 0) continue;
      tmp *= powers_[k][half_index[k] * (max_exp_[k] + 1) + e];
    }
    sum += tmp;
  }
}

double LatticeEvaluator::value(std::span<const std::size_t> half_index) const {
  thread_local Integer sum, tmp;
  thread_local Rational q;
  accumulate(half_index, sum, tmp);
  if (sgn(sum) == 0) return 0.0;
  // Non-canonical numerator/denominator pair: mpq_get_d truncates the exact
  // quotient, which does not depend on the representation.
  mpz_set(mpq_numref(q.get_mpq_t()), sum.get_mpz_t());
  mpz_set(mpq_denref(q.get_mpq_t()), denominator_.get_mpz_t());
  return mpq_get_d(q.get_mpq_t());
}

int LatticeEvaluator::sign(std::span<const std::size_t> half_index) const {
  thread_local Integer sum, tmp;
  accumulate(half_index, sum, tmp);
  return sgn(sum);
}

Rational LatticeEvaluator::coordinate(std::size_t axis0, std::size_t half_index) const {
  return lower_.at(axis0) + half_step_.at(axis0) * Rational(Integer(static_cast<unsigned long>(half_index)));
}

}  // namespace zeroset
