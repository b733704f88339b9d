#pragma once

#include "macbinom/field.hpp"

#include <string>

namespace macbinom {

// Parses an expression over q, t, a, u, theta, x1..x11 with integer
// constants and the operators + - * / ^ and parentheses. Exponents are
// (possibly negative) integers. Throws parse_error on malformed input.
FieldElement parse_field_expression(const std::string& text);

}  // namespace macbinom
