#pragma once

#include <stdexcept>
#include <string>

#include "pcclosure/valfield.hpp"

namespace pcc {

struct ParseError : std::runtime_error {
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  size_t position;
};

/// Parses an exact rational-function expression in t1..tr.
///
/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := ['-'] atom ['^' integer]
///   atom     := integer | variable | '(' expr ')'
///   variable := 't' index      (1 <= index <= rank)
/// Whitespace is insignificant, '^' binds tighter than '*', exponents may
/// be negative (Laurent monomials become fractions).
FieldElement parse_element(const std::string& text, int rank);

/// Same grammar with the extra variable 'X'; parses a polynomial in X with
/// coefficients in K. Division by an expression containing X is rejected.
FieldPoly parse_poly(const std::string& text, int rank);

}  // namespace pcc
