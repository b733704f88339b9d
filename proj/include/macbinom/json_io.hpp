#ifndef MACBINOM_JSON_IO_HPP
#define MACBINOM_JSON_IO_HPP

// Canonical JSON rendering of exact field elements.
//
// Polynomial-in-x elements serialize as
//   {"vars": [...], "terms": [{"monomial": {"x1": 2, ...},
//                              "coeff": {"num": "...", "den": "..."}}]}
// with terms listed in descending graded-lex order of the x-part and each
// coefficient a reduced ratio of polynomials in the ground variables.
// Elements with no x dependence serialize as {"value": "..."}.
// The rendering is deterministic: equal elements produce identical bytes.

#include <string>

#include "macbinom/field.hpp"

namespace macbinom {

std::string field_json_string(const FieldElement& f);
FieldElement field_from_json_string(const std::string& text);

}  // namespace macbinom

#endif
