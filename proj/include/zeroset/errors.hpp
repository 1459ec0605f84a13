#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeroset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, box or scheme text. `position` is a 0-based byte
/// offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation that needs a nontrivial polynomial received the zero one.
class TrivialPolynomialError : public Error {
 public:
  explicit TrivialPolynomialError(const std::string& what)
      : Error(what + ": polynomial is identically zero") {}
};

/// Dimension mismatch, axis index out of range, malformed interval, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zeroset
