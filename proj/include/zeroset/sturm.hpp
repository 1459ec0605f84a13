#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroset/polynomial.hpp"

namespace zeroset {

/// Outcome of counting the zeros of a polynomial on one line segment: either a
/// finite number of distinct real roots, or "the polynomial vanishes on the
/// whole line".
class RootCount {
 public:
  static RootCount finite(std::size_t count) { return RootCount(false, count); }
  static RootCount identically_zero() { return RootCount(true, 0); }

  bool is_identically_zero() const noexcept { return zero_; }
  bool is_finite() const noexcept { return !zero_; }
  /// Distinct roots; 0 for the identically-zero case.
  std::size_t count() const noexcept { return count_; }

  friend bool operator==(const RootCount&, const RootCount&) = default;

 private:
  RootCount(bool zero, std::size_t count) : zero_(zero), count_(count) {}
  bool zero_;
  std::size_t count_;
};

/// An isolating interval. When `exact` is set the root is that rational and
/// lo == hi == *exact; otherwise exactly one root lies in the open (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
};

/// Sturm sequence of the square-free part of a polynomial. Every element is
/// stored as a primitive integer polynomial (a positive multiple of the
/// classical rational chain), which leaves all sign patterns unchanged.
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePolynomial& u);

  const std::vector<UnivariatePolynomial>& polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }

  /// Sign changes of the chain at x, zeros skipped.
  std::size_t sign_variations(const Rational& x) const;
  /// Distinct roots of the input in the half-open interval (a, b].
  std::size_t count_half_open(const Rational& a, const Rational& b) const;
  /// Sign of the square-free part at x.
  int sign_at(const Rational& x) const;

 private:
  std::vector<UnivariatePolynomial> polys_;
  std::vector<std::vector<Integer>> integer_polys_;
};

/// u / gcd(u, u'), scaled to a primitive integer polynomial with positive
/// leading coefficient. Throws DomainError on the zero polynomial.
UnivariatePolynomial square_free_part(const UnivariatePolynomial& u);

/// Positive rational multiple of u with coprime integer coefficients.
UnivariatePolynomial primitive_part(const UnivariatePolynomial& u);

SturmChain sturm_chain(const UnivariatePolynomial& u);

/// Distinct real roots of u in the closed interval [a, b]. IdenticallyZero for
/// u == 0. Throws DomainError unless a < b.
RootCount count_real_roots(const UnivariatePolynomial& u, const Rational& a, const Rational& b);

/// Disjoint isolating intervals for the distinct roots of u in [a, b], sorted
/// increasingly. Throws DomainError on u == 0 or a >= b.
std::vector<RootInterval> isolate_roots(const UnivariatePolynomial& u, const Rational& a,
                                        const Rational& b);

}  // namespace zeroset
