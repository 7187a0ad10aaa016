#pragma once

// Text grammar for polynomials and tower elements:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Identifiers are the polynomial variable, generator names of the tower, and
// `t` for the transcendental of F_p(t). Division is only by nonzero constants.

#include <string>

#include "dcf/polynomial.hpp"

namespace dcf {

Polynomial parse_polynomial(const std::string& text, const TowerField& field, const std::string& var = "x");
TowerElement parse_element(const std::string& text, const TowerField& field);

}  // namespace dcf
