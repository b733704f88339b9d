// Exact division and multivariate gcd.
//
// gcd is computed up to rational units, so integer contents never need to be
// tracked through the recursion: primitive parts are taken at entry, a
// subresultant PRS runs in one chosen variable with coefficients in the
// remaining ones, and per-variable contents are folded recursively.  The
// result is normalized to coprime integer coefficients with a positive
// leading coefficient.

#include <array>
#include <climits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macbinom/poly.hpp"

namespace macbinom {

Poly primitive_positive(const Poly& a);

namespace {

Poly lc_in(const Poly& p, int v) { return coeff_of_power(p, v, p.deg_in(v)); }

// Pseudo-remainder of a by b in the variable v: lc_v(b)^(da-db+1) * a mod b.
Poly prem(Poly a, const Poly& b, int v) {
    const int db = b.deg_in(v);
    const Poly lb = lc_in(b, v);
    int e = a.deg_in(v) - db + 1;
    while (!a.is_zero() && a.deg_in(v) >= db) {
        const int da = a.deg_in(v);
        Poly la = coeff_of_power(a, v, da);
        a = lb * a - (la.mul_mono(Monomial::var(v, da - db))) * b;
        --e;
    }
    if (e > 0 && !a.is_zero()) a = a * lb.pow(static_cast<unsigned>(e));
    return a;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// gcd over the coefficients of p seen as a univariate polynomial in v.
Poly uni_content(const Poly& p, int v) {
    const int lo = p.min_exp_in(v);
    const int hi = p.deg_in(v);
    Poly acc;
    for (int k = lo; k <= hi; ++k) {
        Poly c = coeff_of_power(p, v, k);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? primitive_positive(c) : gcd_rec(acc, c);
        if (acc.is_one()) break;
    }
    return acc;
}

// Subresultant PRS on inputs primitive w.r.t. v with deg_v >= 1; returns the
// gcd of their primitive parts (primitive w.r.t. v, content-free up to sign).
Poly prs_gcd(Poly a, Poly b, int v) {
    if (a.deg_in(v) < b.deg_in(v)) std::swap(a, b);
    Poly g = Poly::one(), h = Poly::one();
    while (true) {
        const int delta = a.deg_in(v) - b.deg_in(v);
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.deg_in(v) == 0) return Poly::one();
        a = std::move(b);
        b = divexact(r, g * h.pow(static_cast<unsigned>(delta)));
        g = lc_in(a, v);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divexact(g.pow(static_cast<unsigned>(delta)),
                         h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    Poly uc = uni_content(b, v);
    if (!uc.is_one()) b = divexact(b, uc);
    return b;
}

// The coefficient polynomials of p in the kept variables, grouped by the
// monomial in the stripped ones.  Within one group the global descending
// order restricts to descending order on the kept part, so each slice is
// already canonical.
std::vector<Poly> kept_slices(const Poly& p, const std::array<bool, vars::kMax>& keep) {
    std::unordered_map<Monomial, std::vector<Poly::Term>, MonoHash> groups;
    std::vector<Monomial> order;
    for (const Poly::Term& t : p.terms()) {
        Monomial key, kept;
        for (int w = 0; w < vars::kMax; ++w)
            (keep[w] ? kept : key).set(w, t.m.exp(w));
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh) order.push_back(key);
        it->second.push_back({kept, t.c});
    }
    std::vector<Poly> out;
    out.reserve(order.size());
    for (const Monomial& key : order) out.push_back(Poly::from_sorted(std::move(groups[key])));
    return out;
}

// Main variable: present in both, smallest min-degree (shortest PRS).
int pick_var(const Poly& a, const Poly& b) {
    int best = -1;
    long best_score = LONG_MAX;
    for (int v = 0; v < vars::kMax; ++v) {
        const int da = a.deg_in(v), db = b.deg_in(v);
        if (da == 0 || db == 0) continue;
        const long score = static_cast<long>(da < db ? da : db) * 1000 + da + db;
        if (score < best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

// Both integer-primitive (up to sign), true polynomials, nonzero.
Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return Poly::one();
    if (a == b) return primitive_positive(a);
    if (a.is_single_term() || b.is_single_term()) {
        Monomial ma = a.monomial_content(), mb = b.monomial_content();
        Monomial g;
        for (int v = 0; v < vars::kMax; ++v)
            g.set(v, ma.exp(v) < mb.exp(v) ? ma.exp(v) : mb.exp(v));
        return Poly::term(Rat(1), g);
    }
    {
        // Strip monomial content first: it hides shared-variable structure
        // from the projection shortcut below.
        const Monomial ma = a.monomial_content(), mb = b.monomial_content();
        if (!(ma == Monomial()) || !(mb == Monomial())) {
            Monomial g;
            for (int w = 0; w < vars::kMax; ++w)
                g.set(w, ma.exp(w) < mb.exp(w) ? ma.exp(w) : mb.exp(w));
            Poly core = gcd_rec(divexact(a, Poly::term(Rat(1), ma)),
                                divexact(b, Poly::term(Rat(1), mb)));
            if (g == Monomial()) return core;
            return core * Poly::term(Rat(1), g);
        }
    }
    const int v = pick_var(a, b);
    if (v < 0) {
        // Disjoint variable supports: any common divisor of two nonzero
        // polynomials only involves variables they share, hence is constant.
        return Poly::one();
    }
    std::array<bool, vars::kMax> shared{};
    bool extra = false;
    for (int w = 0; w < vars::kMax; ++w) {
        const bool ua = a.deg_in(w) > 0, ub = b.deg_in(w) > 0;
        shared[w] = ua && ub;
        if (ua != ub) extra = true;
    }
    if (extra) {
        // Any common divisor lies in the subring generated by the shared
        // variables, so it divides every shared-variable coefficient slice of
        // both inputs.  Folding gcds over the slices avoids dragging the
        // unshared variables through the PRS.
        Poly acc;
        for (const Poly& s : kept_slices(a, shared)) {
            Poly ps = primitive_positive(s);
            acc = acc.is_zero() ? std::move(ps) : gcd_rec(acc, ps);
            if (acc.is_one()) return acc;
        }
        for (const Poly& s : kept_slices(b, shared)) {
            acc = gcd_rec(acc, primitive_positive(s));
            if (acc.is_one()) return acc;
        }
        return acc;
    }
    Poly uca = uni_content(a, v);
    Poly ucb = uni_content(b, v);
    Poly cont_g = gcd_rec(uca, ucb);
    Poly g = prs_gcd(divexact(a, uca), divexact(b, ucb), v);
    if (!cont_g.is_one()) g = g * cont_g;
    return g;
}

}  // namespace

Poly primitive_positive(const Poly& a) {
    Poly p = primitive_part(a);
    if (!p.is_zero() && p.lt().c < 0) p = -p;
    return p;
}

Poly divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw contract_error("division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_one()) return a;
    if (b.is_single_term()) {
        const Poly::Term& bt = b.lt();
        for (const Poly::Term& t : a.terms())
            if (!bt.m.divides(t.m)) throw contract_error("inexact polynomial division");
        return a.mul_term(Rat(1) / bt.c, Monomial() / bt.m);
    }
    Poly rem = a;
    std::vector<Poly::Term> q;
    const Poly::Term& lb = b.lt();
    while (!rem.is_zero()) {
        const Poly::Term& la = rem.lt();
        if (!lb.m.divides(la.m)) throw contract_error("inexact polynomial division");
        Rat c = la.c / lb.c;
        Monomial m = la.m / lb.m;
        rem = rem - b.mul_term(c, m);
        q.push_back({m, std::move(c)});
    }
    return Poly::from_sorted(std::move(q));
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.has_negative_exp() || b.has_negative_exp())
        throw contract_error("gcd requires true polynomials");
    if (a.is_zero()) return primitive_positive(b);
    if (b.is_zero()) return primitive_positive(a);
    Poly pa = primitive_part(a);
    Poly pb = primitive_part(b);
    Poly g = gcd_rec(pa, pb);
    return primitive_positive(g);
}

}  // namespace macbinom
