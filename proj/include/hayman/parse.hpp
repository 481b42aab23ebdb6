#pragma once

#include <stdexcept>
#include <string>

#include "hayman/ratfunc.hpp"

namespace hayman {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("column " + std::to_string(position + 1) + ": " + message), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Rational function in z from text.
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' unary)?
///   atom  := integer | 'z' | '(' expr ')'
///
/// Exponents must evaluate to integer constants. Throws ParseError.
RatFunc parse_ratfunc(const std::string& text);

}  // namespace hayman
