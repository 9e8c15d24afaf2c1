#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tropcm/polynomial.hpp"
#include "tropcm/ring.hpp"

namespace tropcm {

/// Parse failure; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar: sums/differences of products of factors; factors are variables,
/// integer or a/b coefficients, or parenthesized expressions, optionally
/// raised to a non-negative integer power with '^'. '#' starts a comment.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line = 1);

}  // namespace tropcm
