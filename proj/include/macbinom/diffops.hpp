#pragma once

// The shifted n-variable difference operator D*(u): subset-sum application
// at symbolic or exact numeric points, eigenvalues on the interpolation
// basis, the Newton extraction in u of the coefficient operators D_k, the
// eigenvalue (Harish-Chandra) table, the vanishing lemma for the cross
// factors, and the determinant form of the unshifted operator.

#include "macbinom/mac.hpp"
#include "macbinom/newton.hpp"
#include "macbinom/sampling.hpp"

#include <functional>
#include <map>
#include <vector>

namespace macbinom {

// Pointwise evaluation of the operand: maps x-values to f(x).
using PointFn = std::function<FieldElement(const std::vector<FieldElement>&)>;

// Tableau-sum evaluator of P*_mu (never builds the symbolic polynomial).
PointFn pstar_point_fn(Ctx& ctx, const Partition& mu);

// [D*(u) f](x) by the subset-sum expansion; xs and u may be symbolic.
// Throws pole_error when a cross-factor denominator vanishes at xs.
FieldElement apply_dstar(const PointFn& f, const std::vector<FieldElement>& xs,
                         const FieldElement& u);
// The unshifted variant: factors 1 - x_i and 1 - u x_i, cross factors
// (x_i - t x_j)/(x_i - x_j).
FieldElement apply_unshifted(const PointFn& f, const std::vector<FieldElement>& xs,
                             const FieldElement& u);

// prod_i (q^{-mu_i} t^{i-1} - u t^{n-1}).
FieldElement dstar_eigenvalue(const Partition& mu, int n, const FieldElement& u);

// Eigenvalue identity for P*_mu with u and x symbolic (meant for n <= 2).
bool check_dstar_symbolic(Ctx& ctx, const Partition& mu, int n);
// Same identity with u symbolic at a given exact point.
bool check_dstar_at(Ctx& ctx, const Partition& mu, int n,
                    const std::vector<FieldElement>& xs);

// Coefficient of D_k in the expansion of D*(u) over the knots
// u = 1, 1/t, 1/t^2, ...: (-1)^{n-k} t^{(n-1)(n-k)} prod_{s<n-k}(u - t^{-s}).
FieldElement dk_u_coefficient(int k, int n, const FieldElement& u);

// [D_k f](x) for k = 0..n at once, extracted from the values of D*(u) at
// the knots by the triangular solve.
std::vector<FieldElement> apply_dk(const PointFn& f, const std::vector<FieldElement>& xs);

// prod_i (q^{-mu_i} t^{i-1} - u t^{n-1}) = sum_k c_k(u) e*_k(q^{-mu}; 1/t),
// u symbolic: the eigenvalue-level Newton expansion.
bool check_dk_eigenvalue_identity(Ctx& ctx, const Partition& mu, int n);
// Operator level: apply_dk on P*_mu at xs matches e*_k(q^{-mu};1/t) P*_mu(xs).
bool check_dk_at(Ctx& ctx, const Partition& mu, int n,
                 const std::vector<FieldElement>& xs);

// Operator action for the eigenvalue-table builder.
using OpFn = std::function<FieldElement(const PointFn&, const std::vector<FieldElement>&)>;

// Eigenvalue table of a diagonal operator on the interpolation basis over
// the index set.  Diagonality is witnessed at two sample points per entry;
// a non-eigenvector raises contract_error naming the partition.
std::map<Partition, FieldElement> harish_chandra_table(Ctx& ctx, const OpFn& op,
                                                       const std::vector<Partition>& index,
                                                       int n, Sampler& sampler);

// Vanishing lemma for the cross factor at x = a q^xi (a symbolic, xi weakly
// decreasing, I a bitmask over rows 1..n): the factor is nonzero iff xi
// decremented on I is still weakly decreasing.
bool lemma_predicate(const std::vector<int>& xi, unsigned mask);
FieldElement lemma_cross_factor(const std::vector<int>& xi, unsigned mask);
bool check_lemma(const std::vector<int>& xi, unsigned mask);

// n=2 determinant form of the unshifted operator against its subset-sum
// expansion, applied to a polynomial in x1, x2 with everything symbolic.
bool check_determinant_form_n2(const FieldElement& f);

// Image contracts: D*(u) sends a shifted symmetric polynomial to a shifted
// symmetric polynomial of no greater degree.  The symbolic route builds the
// image as one rational expression (n <= 2); the interpolated route
// reconstructs it from knot values and confirms the interpolant on the
// next `shell` sizes of partitions.
bool check_dstar_image_symbolic(Ctx& ctx, const ShiftedSymPoly& f);
bool check_dstar_image_interpolated(Ctx& ctx, const ShiftedSymPoly& f, int shell);

}  // namespace macbinom
