#pragma once

// Symmetric Newton interpolation: expanding a shifted symmetric polynomial
// over the interpolation basis three independent ways (triangular solve on
// knot values, explicit alternating binomial sum, corner-weight recurrence),
// and the theta-regime counterparts where a solver-free pass of repeated
// averaged differences computes the same expansion.

#include "macbinom/mac.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace macbinom {

// All partitions obtained from lambda by removing one corner box.
std::vector<Partition> covers_below(const Partition& lambda);

// Exponent pairs (dy, dx) of the corner factors of a cover nu -> lambda
// (lambda is nu plus one box), measured from the added box: numerator over
// the concave corners of nu away from the box, denominator over the convex
// ones.  Shared by both weight regimes.  Throws contract_error when lambda
// does not cover nu.
struct CoverFactors {
    std::vector<std::pair<int, int>> num, den;
};
CoverFactors cover_factors(const Partition& nu, const Partition& lambda);

// Cover weights: product of (1 - q^dy t^dx), resp. (dy + theta*dx), over the
// factor lists.
FieldElement omega_qt(const Partition& nu, const Partition& lambda);
FieldElement omega_theta(const Partition& nu, const Partition& lambda);

// [lambda; (1)] in closed form: sum_i t^{1-i} (q^{lambda_i} - 1)/(q - 1).
FieldElement binom_single_box(const Partition& lambda);

// Sum of omega_qt over the covers of lambda equals [lambda; (1)], checked
// against both the closed form and the knot-ratio binomial.
bool check_omega_sum(Ctx& ctx, const Partition& lambda);

// Cover-weight recurrence: for mu strictly contained in lambda,
//   sum_{nu -> lambda} omega_qt(nu, lambda) [nu; mu]_{1/q,1/t}
//     = ([lambda;(1)]_{q,t} - [mu;(1)]_{q,t}) [lambda; mu]_{1/q,1/t}.
bool check_cover_recurrence(Ctx& ctx, const Partition& lambda, const Partition& mu);

// Each factor (1 - q^dy t^dx) of omega_qt degenerates to (dy + theta*dx)
// under t = q^s after dividing by (1 - q) and letting q -> 1; checked
// exactly per factor at several integer values s of theta.
bool check_omega_degeneration(const Partition& nu, const Partition& lambda);

// Expansion coefficients keyed by partition, in enumeration order (size,
// then descending lex) over all partitions of size <= deg f with at most
// f.n parts.  Zero coefficients are kept.
using Expansion = std::vector<std::pair<Partition, FieldElement>>;

// The three computations of the same expansion.  Each checks the
// shifted-symmetry contract of f and throws contract_error on violation.
Expansion fhat_direct(Ctx& ctx, const ShiftedSymPoly& f);      // triangular solve
Expansion fhat_explicit(Ctx& ctx, const ShiftedSymPoly& f);    // alternating sum
Expansion fhat_recurrence(Ctx& ctx, const ShiftedSymPoly& f);  // corner weights

// Knot-value forms: f supplies its value at the knot of lambda (x = q^lambda)
// and never needs to exist as a polynomial.  No symmetry check is possible
// here; the caller owns that contract.
using KnotFn = std::function<FieldElement(const Partition&)>;
Expansion fhat_direct(Ctx& ctx, const KnotFn& f, int deg, int n);
Expansion fhat_explicit(Ctx& ctx, const KnotFn& f, int deg, int n);
Expansion fhat_recurrence(Ctx& ctx, const KnotFn& f, int deg, int n);

// Sum of coeff * P*_lambda(x1..xn) over an expansion.
FieldElement reconstruct(Ctx& ctx, const Expansion& e, int n);

// ---- theta regime ----------------------------------------------------------

// Binomial coefficient [lambda; mu]_theta, computed without limits: the
// unique polynomial B_mu symmetric in x_i - theta*i of degree |mu| with
// B_mu(mu) = 1 and B_mu(kappa) = 0 for kappa != mu, |kappa| <= |mu|
// (integer knots x = kappa), evaluated at x = lambda.
FieldElement jack_binom(const Partition& lambda, const Partition& mu);

// The interpolation polynomial B_mu itself, symbolic in x1..xn.
FieldElement jack_basis_poly(const Partition& mu, int n);

// Expansion over the B_mu basis, three ways: triangular solve on integer
// knot values, explicit alternating sum, and the averaged-difference pass
// that touches no binomial coefficients at all.
Expansion jack_fhat_solver(const ShiftedSymPoly& f);
Expansion jack_fhat_explicit(const ShiftedSymPoly& f);
Expansion jack_fhat_fast(const ShiftedSymPoly& f);

// Sum of coeff * B_mu(x1..xn) over an expansion.
FieldElement jack_reconstruct(const Expansion& e, int n);

// One-variable degeneration: the expansion of a polynomial in x1 over the
// basis binom(x1, m) has classical forward differences as coefficients;
// checks jack_fhat_fast against a plain rational difference table.
bool check_jack_one_var(const ShiftedSymPoly& f);

// Trinomial over the box beta = (b^n) at theta = 1 equals the product of
// standard-tableau dimensions:
//   multinomial(|beta|; |lambda|, |nu|) dim(lambda) dim(nu)
//     dim((beta \ nu)/lambda) / dim(beta).
bool check_jack_trinomial_dimension(int b, int n, const Partition& lambda,
                                    const Partition& nu);

}  // namespace macbinom
