#pragma once

#include <string_view>

#include "pdcalc/scalar.hpp"

namespace pdcalc {

// Parses scalar expressions: integers, rationals "p/q", named variables from
// `vars`, with + - * ^ and parentheses. Used for fixture files and for the
// factored determinant expressions the verification tables are checked against.
Scalar parse_scalar(std::string_view text, const VarTable& vars);

} // namespace pdcalc
