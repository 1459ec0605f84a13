#include <cctype>
#include <string>

#include "zeroset/errors.hpp"
#include "zeroset/polynomial.hpp"

namespace zeroset {
namespace {

constexpr unsigned kMaxExponent = 4096;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t dimension) : text_(text), dim_(dimension) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expression() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return Polynomial::constant(dim_, number());
    if (c == 'x' || c == 'X') return power_of(variable());
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return power_of(std::move(inner));
    }
    fail("expected a number, variable or '('");
  }

  Polynomial power_of(Polynomial base) {
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const std::size_t start = pos_;
    std::string digits = take_digits();
    if (digits.empty()) fail("expected exponent");
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    ++pos_;
    std::string digits = take_digits();
    if (digits.empty()) fail("expected variable index after 'x'");
    if (digits.size() > 9 || std::stoul(digits) < 1 || std::stoul(digits) > dim_) {
      pos_ = start;
      fail("variable index " + digits + " out of range 1.." + std::to_string(dim_));
    }
    return Polynomial::variable(dim_, std::stoul(digits));
  }

  std::string take_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out.push_back(text_[pos_++]);
    return out;
  }

  Rational number() {
    const std::size_t start = pos_;
    std::string whole = take_digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::string frac = take_digits();
      if (whole.empty() && frac.empty()) {
        pos_ = start;
        fail("malformed decimal literal");
      }
      Integer num((whole.empty() ? "0" : whole) + frac, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    Rational value{Integer(whole, 10)};
    // '/' only binds between integer literals: "1/4" is a single coefficient.
    if (peek('/')) {
      ++pos_;
      skip_ws();
      std::string den = take_digits();
      if (den.empty()) fail("expected positive integer denominator");
      Integer d(den, 10);
      if (d == 0) fail("zero denominator");
      value /= Rational(d);
    }
    return value;
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t dimension) {
  if (dimension == 0) throw DomainError("polynomial dimension must be positive");
  return ExpressionParser(text, dimension).parse();
}

Rational parse_rational(std::string_view text) {
  // A constant expression in one variable-free slot; reuse the expression
  // grammar and insist the result has no variable terms.
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  bool negate = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negate = text[i] == '-';
    ++i;
  }
  std::string_view body = text.substr(i);
  if (body.empty()) throw ParseError("expected a rational literal", i);
  for (std::size_t j = 0; j < body.size(); ++j) {
    char c = body[j];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' ||
          std::isspace(static_cast<unsigned char>(c))))
      throw ParseError("unexpected character in rational literal", i + j);
  }
  Polynomial p = ExpressionParser(body, 1).parse();
  Rational value = p.is_trivial() ? Rational(0) : p.terms().begin()->second;
  return negate ? Rational(-value) : value;
}

}  // namespace zeroset
