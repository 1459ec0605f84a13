#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zeroset {

/// Arbitrary-precision rational. GMP keeps every mpq_class in canonical form
/// (positive denominator, coprime numerator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using Exponent = std::vector<unsigned>;

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(evaluate(t)); }
  UnivariatePolynomial derivative() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);
  UnivariatePolynomial& operator*=(const Rational& c);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) {
    return a *= c;
  }
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};

/// Euclidean division over Q. Throws DomainError on a zero divisor.
DivisionResult divide(const UnivariatePolynomial& dividend, const UnivariatePolynomial& divisor);

/// Monic gcd over Q (zero if both inputs are zero).
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms map exponent vectors (length == dimension) to nonzero coefficients.
/// Immutable once built; arithmetic returns new values.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit Polynomial(std::size_t dimension) : dim_(dimension) {}

  /// Validates exponent lengths and drops zero coefficients.
  static Polynomial from_terms(std::size_t dimension, TermMap terms);
  static Polynomial constant(std::size_t dimension, const Rational& c);
  /// The coordinate function x_k, k in 1..dimension.
  static Polynomial variable(std::size_t dimension, std::size_t k);

  std::size_t dimension() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_trivial() const noexcept { return terms_.empty(); }
  unsigned total_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  Polynomial pow(unsigned e) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Substitutes x_k -> x_k + shift_k (exact Taylor shift).
  Polynomial translate(std::span<const Rational> shift) const;
  /// Swaps variables x_i and x_j (1-based).
  Polynomial swap_variables(std::size_t i, std::size_t j) const;

  std::string to_string() const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// Parses the expression grammar used by the CLI:
///   expression := term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := INT | INT '/' POSINT | DECIMAL | 'x'INDEX ('^' INT)?
///                 | '(' expression ')' ('^' INT)?
/// Decimal literals convert exactly (0.25 -> 1/4). Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::size_t dimension);

/// Exact rational literal: INT, INT/POSINT or DECIMAL, with optional sign.
Rational parse_rational(std::string_view text);

/// deg_{x_k} p for k in 1..d. Throws TrivialPolynomialError on p == 0.
unsigned degree_in_variable(const Polynomial& p, std::size_t k);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// t -> p(base_1..base_{k-1}, t, base_k..base_{d-1}). The result is the zero
/// polynomial exactly when p vanishes on the whole axis-parallel line.
UnivariatePolynomial restrict_to_line(const Polynomial& p, std::size_t k,
                                      std::span<const Rational> base);

/// (q_0, ..., q_kappa) with p = sum_j q_j x_k^j and kappa = deg_{x_k} p.
/// Each q_j lives in the d-1 remaining variables (order preserved).
/// Empty for the zero polynomial.
std::vector<Polynomial> coefficients_in_variable(const Polynomial& p, std::size_t k);

/// Inserts `t` into `base` at 1-based position k.
std::vector<Rational> insert_coordinate(std::span<const Rational> base, std::size_t k,
                                        const Rational& t);

}  // namespace zeroset
