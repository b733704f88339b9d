#pragma once

#include "macbinom/field.hpp"
#include "macbinom/partition.hpp"
#include "macbinom/shifted.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace macbinom {

// Per-tableau data shared by the combinatorial formulas: the weight psi_T
// and, per box, the entry T(s) and the colengths (a'(s), l'(s)).
struct TableauTerm {
    FieldElement psi;
    std::vector<std::array<int, 3>> boxes;
};

// Memoizing context for all polynomial constructions and evaluations.
// `inv` flips the parameters to (1/q, 1/t) throughout.
class Ctx {
public:
    Ctx();

    const std::vector<TableauTerm>& tableau_terms(const Partition& mu, int n, bool inv);

    // Symbolic constructions.
    const ShiftedSymPoly& pstar(const Partition& mu, int n, bool inv = false);
    const ShiftedSymPoly& macdonald(const Partition& mu, int n, bool inv = false);
    ShiftedSymPoly pstar_oracle(const Partition& mu, int n);
    ShiftedSymPoly e_star(int k, int n);          // P*_{(1^k)}; zero when k > n
    ShiftedSymPoly h_star(int k, int n, bool inv = false);  // P*_{(k)}

    // Closed forms.
    FieldElement h_norm(const Partition& mu, bool inv = false);
    FieldElement principal_special(const Partition& mu, int n, bool inv = false);
    FieldElement pstar_at_constant(const Partition& mu, int n, const FieldElement& a,
                                   bool inv = false);

    // Pointwise tableau-sum evaluation (never builds the symbolic poly).
    FieldElement eval_pstar(const Partition& mu, const std::vector<FieldElement>& xs,
                            bool inv = false);
    FieldElement eval_macdonald(const Partition& mu, const std::vector<FieldElement>& xs,
                                bool inv = false);
    // P*_mu at the knot of lambda in the matching regime (q^lambda, or
    // q^{-lambda} when inv). Cached; uses n = max(len mu, len lambda, 1).
    FieldElement eval_pstar_qlambda(const Partition& mu, const Partition& lambda,
                                    bool inv = false);
    // (q,t)-binomial [lambda; mu] in the requested regime.
    FieldElement binom(const Partition& lambda, const Partition& mu, bool inv = false);

    // e*_k evaluated via the explicit sum formula (independent of pstar).
    // inv_t flips t only (the formula has no q).
    FieldElement e_star_eval(int k, const std::vector<FieldElement>& xs, bool inv_t);
    // e*_k(q^{-mu}; 1/t), the D_k eigenvalue.
    FieldElement e_star_at_qminus(int k, const Partition& mu, int n);

    // q^{qe} t^{te} as a field element, exponents negated when inv.
    static FieldElement qt_mono(long qe, long te, bool inv);

private:
    using PKey = std::tuple<Partition, int, bool>;
    using EKey = std::tuple<Partition, Partition, bool>;
    std::map<PKey, std::vector<TableauTerm>> tab_cache_;
    std::map<PKey, ShiftedSymPoly> pstar_cache_;
    std::map<PKey, ShiftedSymPoly> mac_cache_;
    std::map<EKey, FieldElement> qeval_cache_;
    std::map<EKey, FieldElement> binom_cache_;
    std::string disk_dir_;  // empty = no disk cache

    bool disk_load(const PKey& key, ShiftedSymPoly& out);
    void disk_store(const PKey& key, const ShiftedSymPoly& p);
};

// psi_T for a single tableau (exposed for unit tests).
FieldElement psi_weight(const ReverseTableau& T, int n, bool inv = false);

// m_rho(v_1..v_n): monomial symmetric polynomial evaluated at field values.
FieldElement monomial_sym_eval(const Partition& rho, const std::vector<FieldElement>& vals);

}  // namespace macbinom
