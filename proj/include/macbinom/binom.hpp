#pragma once

// Binomial and trinomial coefficient identities: the main expansion theorem,
// its rewritten and limit forms, the S-matrix symmetry and its Gauss
// decomposition, matrix inversion, duality, and the two generating-function
// expansions for one-column and one-row polynomials.
//
// Every check returns true iff the identity holds exactly; all free
// parameters (a, u, q, t, x_i) stay symbolic unless stated otherwise.

#include "macbinom/mac.hpp"
#include "macbinom/series.hpp"

namespace macbinom {

// Classical one-variable q-binomial, product form, over an arbitrary base:
// prod_{i<m} (base^l - base^i)/(base^m - base^i).  Zero when m > l.
FieldElement gauss_binom(int l, int m, const FieldElement& base);

// One-variable expansions.
bool check_power_expansion(int l);             // x^l in the falling basis
bool check_factorial_expansion(int l);         // alternating inverse expansion
bool check_one_var_binomial(int l);            // n=1 case of the main theorem
bool check_one_var_coefficient(Ctx& ctx, int l);  // coefficient = knot ratio

// All mu with mu_i <= lambda_i, ordered by size then descending lex.
std::vector<Partition> subpartitions(const Partition& lambda);
Partition intersect_partitions(const Partition& a, const Partition& b);

// Main expansion theorem for (lambda, n), symbolic in a and x_1..x_n.
bool check_binomial_theorem(Ctx& ctx, const Partition& lambda, int n);
// Rewritten form with the reflected constant-specialization denominator.
bool check_binomial_alt(Ctx& ctx, const Partition& lambda, int n);
// The reflection identity for P*_mu(a,...,a) itself.
bool check_constant_reflection(Ctx& ctx, const Partition& mu, int n);
// a -> infinity form (ordinary Macdonald polynomials on the left).
bool check_macdonald_limit(Ctx& ctx, const Partition& lambda, int n);
// a -> 0 form (values at the origin as denominators).
bool check_zero_limit(Ctx& ctx, const Partition& lambda, int n);

// S-matrix entry (lambda, nu): P*_lambda at x_i = a q^{-nu_{n+1-i}},
// normalized by P*_lambda(a,...,a).
FieldElement s_entry(Ctx& ctx, const Partition& lambda, const Partition& nu, int n,
                     const FieldElement& a);
bool check_s_symmetry_pair(Ctx& ctx, const Partition& lambda, const Partition& nu, int n);
// Entrywise Gauss decomposition of S through the diagonal matrix A.
bool check_gauss_pair(Ctx& ctx, const Partition& lambda, const Partition& nu, int n);

// Trinomial over the box beta = (b^n): [beta; nu] * [beta \ nu; lambda].
FieldElement trinomial(Ctx& ctx, int b, int n, const Partition& lambda,
                       const Partition& nu, bool inv = false);
bool check_symmetry2(Ctx& ctx, int b, int n, const Partition& lambda, const Partition& nu);
bool check_complement_reflection(Ctx& ctx, int b, int n, const Partition& nu);
// Trinomials through binomials of the inverted regime.
bool check_bt2(Ctx& ctx, int b, int n, const Partition& lambda, const Partition& nu);

// Entry (lambda, nu) of B * C^{-1} * B~ * C = Id (inclusion-triangular).
bool check_inversion_pair(Ctx& ctx, const Partition& lambda, const Partition& nu);
// Conjugation duality: [lambda; mu]_{q,t} = [lambda'; mu']_{1/t,1/q}.
bool check_duality(Ctx& ctx, const Partition& lambda, const Partition& mu);

// Generating functions as truncated series in v = 1/u to order K, n finite.
bool check_genfunc_ecol(Ctx& ctx, int n, int K);  // one-column family
bool check_genfunc_hrow(Ctx& ctx, int n, int K);  // one-row family

}  // namespace macbinom
