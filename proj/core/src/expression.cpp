#include "detrep/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace detrep {

SyntaxError::SyntaxError(std::size_t position, std::string expected, std::string_view found)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         expected + ", found " +
                         (found.empty() ? std::string("end of input")
                                        : "'" + std::string(found.substr(0, 12)) + "'")),
      position_(position),
      expected_(std::move(expected)) {}

VariableOutOfRange::VariableOutOfRange(std::size_t position, long index, int nvars)
    : std::runtime_error("variable x" + std::to_string(index) + " at position " +
                         std::to_string(position) + " is outside x1..x" + std::to_string(nvars)),
      position_(position),
      index_(index) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("operator or end of input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const long e = uint_literal("exponent");
      if (e > 64) fail("exponent <= 64");
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("variable index");
      const long k = uint_literal("variable index");
      if (k < 1 || k > nvars_) throw VariableOutOfRange(at, k, nvars_);
      return Polynomial::variable(nvars_, static_cast<int>(k));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(nvars_, number());
    fail("number, variable or '('");
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit after '.'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return to_double(start, pos_);
    }
    const double numerator = to_double(start, pos_);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const double denominator = to_double(dstart, pos_);
      if (denominator == 0.0) {
        pos_ = dstart;
        fail("nonzero denominator");
      }
      return numerator / denominator;
    }
    return numerator;
  }

  double to_double(std::size_t begin, std::size_t end) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + end, v);
    if (ec != std::errc{} || ptr != text_.data() + end || !std::isfinite(v)) {
      pos_ = begin;
      fail("finite number");
    }
    return v;
  }

  long uint_literal(const char* what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(what);
    long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail(std::string(what) + " in range");
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(pos_, expected, text_.substr(std::min(pos_, text_.size())));
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be positive");
  return Parser(text, nvars).parse();
}

}  // namespace detrep
