#pragma once

#include "macbinom/field.hpp"
#include "macbinom/partition.hpp"

#include <vector>

namespace macbinom {

// Which shift convention the x variables carry: values x_i t^{-i} are
// permuted in the qt regime, values x_i - theta*i in the jack regime.
enum class Regime { qt, jack };

// A polynomial in x_1..x_n invariant under permuting the shifted values.
// The invariant is checked on demand (is_shifted_symmetric), not stored.
struct ShiftedSymPoly {
    int n = 0;
    FieldElement f;

    ShiftedSymPoly() = default;
    ShiftedSymPoly(int n_, FieldElement f_);

    int degree() const;          // total degree in the x variables
    bool is_zero() const { return f.is_zero(); }
};

// Total degree in x1..x11 of the numerator (den must be x-free for the
// notion to make sense; callers hold that invariant).
int x_total_degree(const Poly& p);
bool x_free(const Poly& p);
int max_x_index(const Poly& p);  // 0 when x-free

// Keep only the terms of maximal total x-degree.
FieldElement x_top_layer(const FieldElement& f);

// Substitution swapping the shifted values of slots i and i+1 (1-based).
Subst swap_adjacent(Regime r, int i);

// f(x_1..x_n) invariant under all adjacent shifted swaps.
bool is_shifted_symmetric(const FieldElement& f, int n, Regime r);

// Substitute x_1..x_n by the given values (xs.size() determines n; any
// higher x variable present in f is a contract violation).
FieldElement eval_xs(const FieldElement& f, const std::vector<FieldElement>& xs);

// Knots. qt regime: x_i = q^{lambda_i} (lambda padded with zeros).
// jack regime: x_i = lambda_i.
std::vector<FieldElement> knot_qpow(const Partition& lambda, int n);
std::vector<FieldElement> knot_qpow_inv(const Partition& lambda, int n);
std::vector<FieldElement> knot_integers(const Partition& lambda, int n);

}  // namespace macbinom
