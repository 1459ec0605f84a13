#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroset/polynomial.hpp"

namespace zeroset {

/// Axis-aligned box prod_k [a_k, b_k] with rational bounds, a_k < b_k.
class Box {
 public:
  using Interval = std::pair<Rational, Rational>;

  explicit Box(std::vector<Interval> intervals);
  static Box cube(std::size_t dimension, const Rational& a, const Rational& b);

  std::size_t dimension() const noexcept { return intervals_.size(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  /// Axis accessors take 1-based indices.
  const Rational& lower(std::size_t k) const { return intervals_.at(k - 1).first; }
  const Rational& upper(std::size_t k) const { return intervals_.at(k - 1).second; }
  Rational side(std::size_t k) const { return upper(k) - lower(k); }
  bool is_cube() const noexcept;

  Rational volume() const;
  /// Volume of the projection that drops axis k (1 when dimension == 1).
  Rational projected_volume(std::size_t k) const;
  /// Intervals of the projected box, axis k removed.
  std::vector<Interval> projected_intervals(std::size_t k) const;

  Box translated(std::span<const Rational> shift) const;
  Box swapped(std::size_t i, std::size_t j) const;

  /// "a,b;c,d" style text, each bound an exact rational literal.
  std::string to_string() const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// "a,b" is the cube [a,b]^dimension; "a1,b1;a2,b2;..." lists one interval
/// per axis and must have exactly `dimension` entries. Throws ParseError or
/// DomainError.
Box parse_box(std::string_view text, std::size_t dimension);

}  // namespace zeroset
