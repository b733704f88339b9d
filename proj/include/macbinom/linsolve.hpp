#pragma once

#include "macbinom/field.hpp"

#include <vector>

namespace macbinom {

// Solve the square system A c = b exactly. Rows are cleared to polynomial
// entries, eliminated fraction-free (Bareiss), then back-substituted over
// the fraction field. Throws singular_error when A is singular.
std::vector<FieldElement> solve_square(std::vector<std::vector<FieldElement>> A,
                                       std::vector<FieldElement> b);

}  // namespace macbinom
