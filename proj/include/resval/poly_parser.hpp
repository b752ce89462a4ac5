#pragma once

#include <string_view>

#include "resval/polynomial.hpp"

namespace resval {

/// Parses either an expression in x ("(x+2)*(x+3)", "x^2-5*x+6") built from
/// integer literals, x, + - * ^ and parentheses, or a bracketed ascending
/// coefficient list ("[6,5,1]"). Throws ParseError carrying the byte offset.
/// Monicity is not checked.
Polynomial parse_polynomial(std::string_view text);

}  // namespace resval
