#pragma once

// Expression language for scalar fields:
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" uint)?
//   base   := uint | "i" | ident | "(" expr ")"
// Whitespace is insignificant; identifiers must be chart coordinates.

#include <string>
#include <string_view>
#include <vector>

#include "gencliff/scalar.hpp"

namespace gencliff {

/// Throws ParseError (syntax, unknown identifier) or std::domain_error
/// (division by the zero polynomial).
ScalarField parse_expr(std::string_view text, const Chart& chart);

/// Parses an expression that is linear in the formal `symbols` (for example
/// frame names d1, e2) with scalar-field multipliers. Returns one coefficient
/// per symbol. A nonzero symbol-free part, a product of two symbols, or a
/// symbol in a denominator or exponent is a ParseError.
std::vector<ScalarField> parse_linear(std::string_view text, const Chart& chart,
                                      const std::vector<std::string>& symbols);

}  // namespace gencliff
