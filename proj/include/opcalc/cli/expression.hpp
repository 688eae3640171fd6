#pragma once

#include <functional>
#include <string>

#include "opcalc/types.hpp"

namespace opcalc::cli {

// Compiles a forcing expression into a callable. Grammar: sums, products,
// integer powers, unary minus, exp/sin/cos, the variable x, the imaginary
// unit i, and decimal literals. Throws ExpressionError on bad input.
std::function<Complex(double)> parse_expression(const std::string& text);

}  // namespace opcalc::cli
