#include "zeroset/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zeroset/errors.hpp"

namespace zeroset {

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UnivariatePolynomial(std::move(coeffs));
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivisionResult divide(const UnivariatePolynomial& dividend, const UnivariatePolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UnivariatePolynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (sgn(rem[ui]) == 0) continue;
    Rational q = rem[ui] / lead;
    quot[ui - static_cast<std::size_t>(dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[ui - static_cast<std::size_t>(dd) + static_cast<std::size_t>(j)] -=
          q * divisor[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.leading();
  return a * inv;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void add_term(Polynomial::TermMap& terms, const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

void check_axis(const Polynomial& p, std::size_t k) {
  if (k < 1 || k > p.dimension())
    throw DomainError("axis index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(p.dimension()));
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t dimension, TermMap terms) {
  Polynomial p(dimension);
  for (auto& [e, c] : terms) {
    if (e.size() != dimension)
      throw DomainError("exponent vector length " + std::to_string(e.size()) +
                        " does not match dimension " + std::to_string(dimension));
    if (sgn(c) != 0) p.terms_.emplace(e, c);
  }
  return p;
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
  Polynomial p(dimension);
  if (sgn(c) != 0) p.terms_.emplace(Exponent(dimension, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t k) {
  if (k < 1 || k > dimension) throw DomainError("variable index out of range");
  Polynomial p(dimension);
  Exponent e(dimension, 0);
  e[k - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DomainError("dimension mismatch in polynomial addition");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) add_term(out.terms_, e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DomainError("dimension mismatch in polynomial product");
  Polynomial out(a.dim_);
  Exponent e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      add_term(out.terms_, e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  if (sgn(c) == 0) return Polynomial(a.dim_);
  Polynomial out = a;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(dim_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
  if (shift.size() != dim_) throw DomainError("shift length does not match dimension");
  std::vector<Polynomial> shifted_vars;
  shifted_vars.reserve(dim_);
  for (std::size_t k = 1; k <= dim_; ++k)
    shifted_vars.push_back(variable(dim_, k) + constant(dim_, shift[k - 1]));
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(dim_, c);
    for (std::size_t k = 0; k < dim_; ++k)
      if (e[k] > 0) term = term * shifted_vars[k].pow(e[k]);
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::swap_variables(std::size_t i, std::size_t j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) throw DomainError("variable index out of range");
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[j - 1]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    bool wrote = false;
    if (mag != 1 || !any_var) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

unsigned degree_in_variable(const Polynomial& p, std::size_t k) {
  check_axis(p, k);
  if (p.is_trivial()) throw TrivialPolynomialError("degree_in_variable");
  unsigned best = 0;
  for (const auto& [e, c] : p.terms()) best = std::max(best, e[k - 1]);
  return best;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.dimension())
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(p.dimension()));
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

UnivariatePolynomial restrict_to_line(const Polynomial& p, std::size_t k,
                                      std::span<const Rational> base) {
  check_axis(p, k);
  if (base.size() + 1 != p.dimension())
    throw DomainError("line base has " + std::to_string(base.size()) + " coordinates, expected " +
                      std::to_string(p.dimension() - 1));
  std::vector<Rational> coeffs;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0, b = 0; i < e.size(); ++i) {
      if (i == k - 1) continue;
      for (unsigned j = 0; j < e[i]; ++j) term *= base[b];
      ++b;
    }
    const std::size_t deg = e[k - 1];
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += term;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

std::vector<Polynomial> coefficients_in_variable(const Polynomial& p, std::size_t k) {
  check_axis(p, k);
  if (p.is_trivial()) return {};
  const unsigned kappa = degree_in_variable(p, k);
  std::vector<Polynomial::TermMap> parts(kappa + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent rest;
    rest.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k - 1) rest.push_back(e[i]);
    parts[e[k - 1]].emplace(std::move(rest), c);
  }
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& t : parts) out.push_back(Polynomial::from_terms(p.dimension() - 1, std::move(t)));
  return out;
}

std::vector<Rational> insert_coordinate(std::span<const Rational> base, std::size_t k,
                                        const Rational& t) {
  if (k < 1 || k > base.size() + 1) throw DomainError("insert position out of range");
  std::vector<Rational> out(base.begin(), base.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(k - 1), t);
  return out;
}

}  // namespace zeroset
