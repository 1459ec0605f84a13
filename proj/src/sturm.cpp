#include "zeroset/sturm.hpp"

#include <utility>

#include "zeroset/errors.hpp"

namespace zeroset {
namespace {

std::vector<Integer> integer_coefficients(const UnivariatePolynomial& u) {
  std::vector<Integer> out;
  out.reserve(u.coefficients().size());
  for (const auto& c : u.coefficients()) out.push_back(c.get_num());
  return out;
}

// Sign of sum_i c_i (n/d)^i given d > 0, via the homogenised integer form
// sum_i c_i n^i d^(m-i).
int sign_of(const std::vector<Integer>& c, const Integer& n, const Integer& d, Integer& acc,
            Integer& dpow) {
  if (c.empty()) return 0;
  acc = c.back();
  dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= n;
    dpow *= d;
    acc += c[i] * dpow;
  }
  return sgn(acc);
}

}  // namespace

UnivariatePolynomial primitive_part(const UnivariatePolynomial& u) {
  if (u.is_zero()) return u;
  Integer den_lcm = 1;
  for (const auto& c : u.coefficients())
    if (sgn(c) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  std::vector<Integer> ints;
  ints.reserve(u.coefficients().size());
  for (const auto& c : u.coefficients()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / num_gcd));
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial square_free_part(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (u.degree() == 0) return UnivariatePolynomial({Rational(1)});
  UnivariatePolynomial g = gcd(u, u.derivative());
  UnivariatePolynomial sf = divide(u, g).quotient;
  sf = primitive_part(sf);
  if (sgn(sf.leading()) < 0) sf *= Rational(-1);
  return sf;
}

SturmChain::SturmChain(const UnivariatePolynomial& u) {
  if (u.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  polys_.push_back(square_free_part(u));
  if (polys_.back().degree() > 0) {
    polys_.push_back(primitive_part(polys_.back().derivative()));
    for (;;) {
      const auto& a = polys_[polys_.size() - 2];
      const auto& b = polys_.back();
      UnivariatePolynomial r = divide(a, b).remainder;
      if (r.is_zero()) break;
      r = primitive_part(r);
      r *= Rational(-1);
      polys_.push_back(std::move(r));
    }
  }
  integer_polys_.reserve(polys_.size());
  for (const auto& p : polys_) integer_polys_.push_back(integer_coefficients(p));
}

std::size_t SturmChain::sign_variations(const Rational& x) const {
  Integer acc, dpow;
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : integer_polys_) {
    int s = sign_of(c, x.get_num(), x.get_den(), acc, dpow);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::sign_at(const Rational& x) const {
  Integer acc, dpow;
  return sign_of(integer_polys_.front(), x.get_num(), x.get_den(), acc, dpow);
}

std::size_t SturmChain::count_half_open(const Rational& a, const Rational& b) const {
  const std::size_t va = sign_variations(a);
  const std::size_t vb = sign_variations(b);
  return va - vb;
}

SturmChain sturm_chain(const UnivariatePolynomial& u) { return SturmChain(u); }

RootCount count_real_roots(const UnivariatePolynomial& u, const Rational& a, const Rational& b) {
  if (!(a < b)) throw DomainError("count_real_roots requires a < b");
  if (u.is_zero()) return RootCount::identically_zero();
  if (u.degree() == 0) return RootCount::finite(0);
  if (u.degree() == 1) {
    // Single root -u0/u1; no chain needed.
    Rational r = -u[0] / u[1];
    return RootCount::finite(a <= r && r <= b ? 1 : 0);
  }
  SturmChain chain(u);
  std::size_t n = chain.count_half_open(a, b);
  if (chain.sign_at(a) == 0) ++n;
  return RootCount::finite(n);
}

std::vector<RootInterval> isolate_roots(const UnivariatePolynomial& u, const Rational& a,
                                        const Rational& b) {
  if (u.is_zero()) throw DomainError("isolate_roots of the zero polynomial");
  if (!(a < b)) throw DomainError("isolate_roots requires a < b");
  std::vector<RootInterval> out;
  if (u.degree() == 0) return out;
  SturmChain chain(u);
  if (chain.sign_at(a) == 0) out.push_back({a, a, a});

  // Depth-first over (lo, hi] pieces, left to right.
  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = std::move(stack.back());
    stack.pop_back();
    const std::size_t n = chain.count_half_open(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      if (chain.sign_at(hi) == 0) out.push_back({hi, hi, hi});
      else out.push_back({lo, hi, std::nullopt});
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(std::move(lo), std::move(mid));
  }
  return out;
}

}  // namespace zeroset
