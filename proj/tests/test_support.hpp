#pragma once

#include <random>

#include "oracles.hpp"
#include "zeroset/polynomial.hpp"

namespace zeroset::testing {

inline Polynomial from_dense(std::size_t dim, const oracle::Dense& d) {
  Polynomial::TermMap terms(d.begin(), d.end());
  return Polynomial::from_terms(dim, std::move(terms));
}

inline oracle::Dense to_dense(const Polynomial& p) {
  return oracle::Dense(p.terms().begin(), p.terms().end());
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned max_deg,
                                    std::size_t terms) {
  return from_dense(dim, oracle::random_dense(rng, dim, max_deg, terms));
}

/// Canonical-form check for every stored coefficient.
inline bool canonical(const Polynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != p.dimension()) return false;
    if (sgn(c) == 0) return false;
    if (sgn(c.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    if (g != 1) return false;
  }
  return true;
}

}  // namespace zeroset::testing
