#pragma once

// Recursive-descent parser for rational function expressions over Q(i).
// Precedence ^ > unary minus > * / > + -, with ^ right-associative and
// restricted to constant integer exponents (negative exponents become
// division).  The imaginary unit is the bare token `i`; products like 2*i
// must be written with an explicit `*`.

#include <string>

#include "legendrian/rational_function.hpp"

namespace legendrian {

RationalFunction parse_expression(const std::string& text);

// Canonical printout accepted back by parse_expression.
std::string print_expression(const RationalFunction& r, const std::string& var = "z");

}  // namespace legendrian
