#include "zeroset/exact_sum.hpp"

#include <cmath>

namespace zeroset {

void ExactSum::add(double x) {
  if (x == 0.0) return;
  int exp = 0;
  const double frac = std::frexp(x, &exp);
  // x = mant * 2^(exp - 53) with |mant| < 2^53 an integer.
  const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  const int bit = exp - 53 + kBias;
  const bool negative = mant < 0;
  unsigned __int128 mag = static_cast<unsigned __int128>(negative ? -mant : mant);
  mag <<= (bit % 32);
  const int d = bit / 32;
  for (int i = 0; i < 3 && mag != 0; ++i) {
    const auto piece = static_cast<std::int64_t>(static_cast<std::uint64_t>(mag) & 0xFFFFFFFFull);
    digits_[static_cast<std::size_t>(d + i)] += negative ? -piece : piece;
    mag >>= 32;
  }
  if (++pending_ >= (1u << 30)) normalize();
}

void ExactSum::merge(const ExactSum& other) {
  ExactSum rhs = other;
  rhs.normalize();
  normalize();
  for (std::size_t i = 0; i < digits_.size(); ++i) digits_[i] += rhs.digits_[i];
  normalize();
}

void ExactSum::normalize() {
  for (std::size_t i = 0; i + 1 < digits_.size(); ++i) {
    const std::int64_t carry = digits_[i] >> 32;  // floor division by 2^32
    digits_[i] -= carry * (std::int64_t{1} << 32);
    digits_[i + 1] += carry;
  }
  pending_ = 0;
}

double ExactSum::value() const {
  ExactSum c = *this;
  c.normalize();
  // After normalizing, digits below the top lie in [0, 2^32) and the top
  // digit carries the sign of the whole sum.
  const bool negative = c.digits_.back() < 0;
  if (negative) {
    for (auto& d : c.digits_) d = -d;
    c.normalize();
  }
  int top = kDigits - 1;
  while (top >= 0 && c.digits_[static_cast<std::size_t>(top)] == 0) --top;
  if (top < 0) return 0.0;
  // Three digits from the top give at least 65 significant bits.
  __int128 window = 0;
  const int lowest = top - 2;
  for (int i = top; i >= lowest; --i) {
    window *= (__int128{1} << 32);
    if (i >= 0) window += c.digits_[static_cast<std::size_t>(i)];
  }
  bool sticky = false;
  for (int i = lowest - 1; i >= 0; --i)
    if (c.digits_[static_cast<std::size_t>(i)] != 0) sticky = true;
  // Fold the discarded tail into the last bit so the conversion below sees
  // an inexact value where appropriate.
  window = window * 2 + (sticky ? 1 : 0);
  const double magnitude =
      static_cast<double>(std::ldexp(static_cast<long double>(window), 32 * lowest - kBias - 1));
  return negative ? -magnitude : magnitude;
}

}  // namespace zeroset
