#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "detrep/poly.hpp"

namespace detrep {

/// Malformed expression text. position() is a 0-based byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::string expected, std::string_view found);
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Reference to x_k with k > nvars (or k == 0).
class VariableOutOfRange : public std::runtime_error {
 public:
  VariableOutOfRange(std::size_t position, long index, int nvars);
  std::size_t position() const noexcept { return position_; }
  long index() const noexcept { return index_; }

 private:
  std::size_t position_;
  long index_;
};

/// Parses and expands a polynomial expression.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := number | variable | '(' expr ')'
///   number := int | decimal | int '/' uint
///   variable := 'x' uint
///
/// Implicit multiplication is rejected. Whitespace between tokens is ignored.
Polynomial parse_expression(std::string_view text, int nvars);

}  // namespace detrep
