#pragma once

#include <array>
#include <cstdint>

namespace zeroset {

/// Order-independent floating-point sum. Every addend is accumulated exactly
/// as a fixed-point integer spanning the full double range, so the result is
/// a function of the multiset of addends only: no dependence on summation
/// order, thread count or merge tree. Non-finite inputs are not supported.
class ExactSum {
 public:
  void add(double x);
  void merge(const ExactSum& other);
  /// Deterministic rounding of the exact sum (within a few ulps of nearest).
  double value() const;

 private:
  // 32-bit digits; digit i carries weight 2^(32 i - kBias).
  static constexpr int kBias = 1126;
  static constexpr int kDigits = 72;
  void normalize();

  std::array<std::int64_t, kDigits> digits_{};
  std::uint32_t pending_ = 0;
};

}  // namespace zeroset
