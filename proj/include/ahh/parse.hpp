#pragma once

#include "ahh/factored.hpp"

#include <string_view>

namespace ahh {

// Integers, a/b, x, + - * ^ and parentheses. Whitespace is ignored.
Poly parse_poly(std::string_view text, Field f);

// Comma-separated factor^mult terms, e.g. "x^3,(x-1)^2". A bare constant term is folded into the unit.
FactoredPoly parse_factored(std::string_view text, Field f);

}  // namespace ahh
