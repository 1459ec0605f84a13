#pragma once

// Test-only reference computations. Nothing in here calls into the library
// code paths it is used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

/// Dense multivariate polynomial keyed by exponent tuple, built from scratch.
using Dense = std::map<std::vector<unsigned>, Q>;

inline Dense dense_product(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline unsigned dense_degree(const Dense& a, std::size_t axis0) {
  unsigned d = 0;
  for (const auto& [e, c] : a) d = std::max(d, e[axis0]);
  return d;
}

/// Term-by-term evaluation with explicit mpq powers.
inline Q naive_evaluate(const Dense& p, const std::vector<Q>& x) {
  Q sum = 0;
  for (const auto& [e, c] : p) {
    Q term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Q power = 1;
      for (unsigned j = 0; j < e[i]; ++j) power *= x[i];
      term *= power;
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Descartes / Vincent-Collins-Akritas root counting on (0, 1) for integer
// polynomials. Independent of Sturm sequences.

using IntPoly = std::vector<Z>;  // lowest degree first

inline std::size_t sign_changes(const IntPoly& p) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

inline IntPoly taylor_shift_one(IntPoly p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) p[j] += p[j + 1];
  return p;
}

/// p(x) -> 2^n p(x/2)
inline IntPoly halve(const IntPoly& p) {
  IntPoly out(p.size());
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Z s;
    mpz_mul_2exp(s.get_mpz_t(), p[i].get_mpz_t(), n - i);
    out[i] = s;
  }
  return out;
}

inline Z eval_int(const IntPoly& p, const Z& num, const Z& den) {
  // homogenised: sum c_i num^i den^(n-i)
  Z acc = 0;
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Z a, b;
    mpz_pow_ui(a.get_mpz_t(), num.get_mpz_t(), i);
    mpz_pow_ui(b.get_mpz_t(), den.get_mpz_t(), n - i);
    acc += p[i] * a * b;
  }
  return acc;
}

/// Roots in the open interval (0, 1) of a square-free integer polynomial.
/// nullopt if the recursion does not terminate (repeated roots).
inline std::optional<std::size_t> descartes_open_unit(const IntPoly& p, int depth = 0) {
  if (depth > 80) return std::nullopt;
  IntPoly rev(p.rbegin(), p.rend());
  const std::size_t v = sign_changes(taylor_shift_one(rev));
  if (v <= 1) return v;
  std::size_t total = 0;
  if (sgn(eval_int(p, 1, 2)) == 0) ++total;
  const IntPoly left = halve(p);
  const IntPoly right = taylor_shift_one(left);
  auto l = descartes_open_unit(left, depth + 1);
  auto r = descartes_open_unit(right, depth + 1);
  if (!l || !r) return std::nullopt;
  return total + *l + *r;
}

/// Distinct roots of integer p in the closed [lo, hi] (integers lo < hi),
/// via the substitution x = lo + (hi - lo) y.
inline std::optional<std::size_t> descartes_closed(const IntPoly& p, long lo, long hi) {
  const std::size_t n = p.size() - 1;
  // q(y) = p(lo + w y), w = hi - lo
  IntPoly q(n + 1, 0);
  IntPoly power{1};  // (lo + w y)^i
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < power.size(); ++j) q[j] += p[i] * power[j];
    IntPoly next(power.size() + 1, 0);
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j] += power[j] * lo;
      next[j + 1] += power[j] * (hi - lo);
    }
    power = std::move(next);
  }
  auto open = descartes_open_unit(q);
  if (!open) return std::nullopt;
  std::size_t count = *open;
  if (sgn(eval_int(p, lo, 1)) == 0) ++count;
  if (sgn(eval_int(p, hi, 1)) == 0) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Quadrature

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 0) {
  struct Rec {
    const std::function<double(double)>& f;
    double go(double a, double b, double fa, double fm, double fb, double whole, double tol,
              int depth) const {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6 * (fa + 4 * flm + fm);
      const double right = (b - m) / 6 * (fm + 4 * frm + fb);
      const double delta = left + right - whole;
      if (depth > 48 || std::fabs(delta) <= 15 * tol) return left + right + delta / 15;
      return go(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
             go(m, b, fm, frm, fb, right, tol / 2, depth + 1);
    }
  };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return Rec{f}.go(a, b, fa, fm, fb, whole, tol, depth);
}

/// Arc length of {x y = c} inside [0,1]^2: the graph y = c/x for x in [c, 1].
inline double hyperbola_length(double c) {
  return adaptive_simpson([c](double x) { return std::sqrt(1 + c * c / (x * x * x * x)); }, c, 1.0,
                          1e-12);
}

/// Area of {x y z = c} inside [0,1]^3 as the graph z = c/(x y) over
/// {x y >= c}, by nested adaptive quadrature.
inline double hyperboloid_area(double c) {
  auto inner = [c](double x) {
    return adaptive_simpson(
        [c, x](double y) {
          const double zx = c / (x * x * y), zy = c / (x * y * y);
          return std::sqrt(1 + zx * zx + zy * zy);
        },
        c / x, 1.0, 1e-10);
  };
  return adaptive_simpson(inner, c, 1.0, 1e-8);
}

// ---------------------------------------------------------------------------
// Random inputs

/// Small random rational in [-range, range] with denominators up to `den`.
inline Q random_rational(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> d(1, den);
  const long q = d(rng);
  std::uniform_int_distribution<long> n(-range * q, range * q);
  Q r(n(rng), q);
  r.canonicalize();
  return r;
}

inline Dense random_dense(std::mt19937_64& rng, std::size_t dim, unsigned max_deg,
                          std::size_t terms) {
  Dense out;
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> ex(dim);
    for (auto& x : ex) x = e(rng);
    Q c = random_rational(rng, 5, 4);
    if (sgn(c) == 0) c = 1;
    out[ex] += c;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  if (out.empty()) out[std::vector<unsigned>(dim, 0)] = 1;
  return out;
}

}  // namespace oracle
