#include "zeroset/box.hpp"

#include <algorithm>

#include "zeroset/errors.hpp"

namespace zeroset {

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw DomainError("box must have at least one axis");
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (!(intervals_[k].first < intervals_[k].second))
      throw DomainError("box axis " + std::to_string(k + 1) + " has lower bound >= upper bound");
  }
}

Box Box::cube(std::size_t dimension, const Rational& a, const Rational& b) {
  return Box(std::vector<Interval>(dimension, Interval{a, b}));
}

bool Box::is_cube() const noexcept {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv == intervals_.front(); });
}

Rational Box::volume() const {
  Rational v = 1;
  for (const auto& [a, b] : intervals_) v *= b - a;
  return v;
}

Rational Box::projected_volume(std::size_t k) const {
  if (k < 1 || k > dimension()) throw DomainError("axis index out of range");
  Rational v = 1;
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (i != k - 1) v *= intervals_[i].second - intervals_[i].first;
  return v;
}

std::vector<Box::Interval> Box::projected_intervals(std::size_t k) const {
  if (k < 1 || k > dimension()) throw DomainError("axis index out of range");
  std::vector<Interval> out;
  out.reserve(intervals_.size() - 1);
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (i != k - 1) out.push_back(intervals_[i]);
  return out;
}

Box Box::translated(std::span<const Rational> shift) const {
  if (shift.size() != dimension()) throw DomainError("shift length does not match box dimension");
  std::vector<Interval> out = intervals_;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].first += shift[k];
    out[k].second += shift[k];
  }
  return Box(std::move(out));
}

Box Box::swapped(std::size_t i, std::size_t j) const {
  std::vector<Interval> out = intervals_;
  std::swap(out.at(i - 1), out.at(j - 1));
  return Box(std::move(out));
}

std::string Box::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (k) out += ';';
    out += intervals_[k].first.get_str() + "," + intervals_[k].second.get_str();
  }
  return out;
}

Box parse_box(std::string_view text, std::size_t dimension) {
  if (dimension == 0) throw DomainError("box dimension must be positive");
  std::vector<Box::Interval> intervals;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(';', start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    std::size_t comma = piece.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'a,b' interval", start);
    if (piece.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("too many ',' in interval", start + piece.find(',', comma + 1));
    Rational a, b;
    try {
      a = parse_rational(piece.substr(0, comma));
      b = parse_rational(piece.substr(comma + 1));
    } catch (const ParseError& e) {
      throw ParseError("malformed interval bound", start);
    }
    intervals.emplace_back(std::move(a), std::move(b));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (intervals.size() == 1 && dimension > 1) intervals.resize(dimension, intervals.front());
  if (intervals.size() != dimension)
    throw ParseError("box lists " + std::to_string(intervals.size()) + " intervals, expected " +
                         std::to_string(dimension),
                     0);
  for (std::size_t k = 0; k < intervals.size(); ++k)
    if (!(intervals[k].first < intervals[k].second))
      throw DomainError("box axis " + std::to_string(k + 1) + " has lower bound >= upper bound");
  return Box(std::move(intervals));
}

}  // namespace zeroset
