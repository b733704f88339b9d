#include "macbinom/diffops.hpp"

#include <utility>

#include "macbinom/vars.hpp"

namespace macbinom {

namespace {

// One subset term of the expansion.  For the shifted operator the row
// weights carry t^{n-i} and the cross factors carry t^{i-j+1}/t^{i-j};
// the unshifted operator drops all of them.
FieldElement apply_core(const PointFn& f, const std::vector<FieldElement>& xs,
                        const FieldElement& u, bool shifted) {
    const int n = static_cast<int>(xs.size());
    if (n < 1 || n >= 31) throw contract_error("apply_core: bad variable count");
    const FieldElement one(Poly::one());
    const FieldElement qinv = Ctx::qt_mono(-1, 0, false);

    std::vector<FieldElement> xw(n + 1);
    for (int i = 1; i <= n; ++i)
        xw[i] = shifted ? xs[i - 1] * Ctx::qt_mono(0, n - i, false) : xs[i - 1];

    std::vector<std::pair<Poly, Poly>> parts;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int sz = __builtin_popcount(mask);
        FieldElement coef =
            Ctx::qt_mono(0, static_cast<long>(n - sz) * (n - sz - 1) / 2, false);
        for (int i = 1; i <= n && !coef.is_zero(); ++i) {
            coef = ((mask >> (i - 1)) & 1) ? coef * (one - xw[i])
                                           : coef * (one - u * xw[i]);
        }
        for (int i = 1; i <= n && !coef.is_zero(); ++i) {
            if (!((mask >> (i - 1)) & 1)) continue;
            for (int j = 1; j <= n; ++j) {
                if ((mask >> (j - 1)) & 1) continue;
                FieldElement num =
                    xs[i - 1] - xs[j - 1] * Ctx::qt_mono(0, shifted ? i - j + 1 : 1, false);
                FieldElement den =
                    shifted ? xs[i - 1] - xs[j - 1] * Ctx::qt_mono(0, i - j, false)
                            : xs[i - 1] - xs[j - 1];
                coef = coef * (num / den);
            }
        }
        if (coef.is_zero()) continue;
        std::vector<FieldElement> shifted_xs = xs;
        for (int i = 1; i <= n; ++i)
            if ((mask >> (i - 1)) & 1) shifted_xs[i - 1] = shifted_xs[i - 1] * qinv;
        FieldElement term = coef * f(shifted_xs);
        if (sz % 2) term = -term;
        parts.emplace_back(term.num(), term.den());
    }
    FieldElement total = fraction_sum(std::move(parts));
    for (int i = 0; i < n; ++i) total = total / xs[i];
    return total;
}

}  // namespace

PointFn pstar_point_fn(Ctx& ctx, const Partition& mu) {
    return [&ctx, mu](const std::vector<FieldElement>& vals) {
        return ctx.eval_pstar(mu, vals, false);
    };
}

FieldElement apply_dstar(const PointFn& f, const std::vector<FieldElement>& xs,
                         const FieldElement& u) {
    return apply_core(f, xs, u, true);
}

FieldElement apply_unshifted(const PointFn& f, const std::vector<FieldElement>& xs,
                             const FieldElement& u) {
    return apply_core(f, xs, u, false);
}

FieldElement dstar_eigenvalue(const Partition& mu, int n, const FieldElement& u) {
    if (n < mu.length()) throw contract_error("dstar_eigenvalue: partition too long");
    FieldElement ev(Poly::one());
    const FieldElement tpow = Ctx::qt_mono(0, n - 1, false);
    for (int i = 1; i <= n; ++i)
        ev = ev * (Ctx::qt_mono(-mu.part(i), i - 1, false) - u * tpow);
    return ev;
}

bool check_dstar_symbolic(Ctx& ctx, const Partition& mu, int n) {
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::var(vars::x(i)));
    const FieldElement u = FieldElement::var(vars::U);
    FieldElement lhs = apply_dstar(pstar_point_fn(ctx, mu), xs, u);
    FieldElement rhs = dstar_eigenvalue(mu, n, u) * ctx.pstar(mu, n, false).f;
    return lhs.equals(rhs);
}

bool check_dstar_at(Ctx& ctx, const Partition& mu, int n,
                    const std::vector<FieldElement>& xs) {
    if (static_cast<int>(xs.size()) != n) throw contract_error("check_dstar_at: point size");
    const FieldElement u = FieldElement::var(vars::U);
    FieldElement lhs = apply_dstar(pstar_point_fn(ctx, mu), xs, u);
    FieldElement rhs = dstar_eigenvalue(mu, n, u) * ctx.eval_pstar(mu, xs, false);
    return lhs.equals(rhs);
}

FieldElement dk_u_coefficient(int k, int n, const FieldElement& u) {
    if (k < 0 || k > n) throw contract_error("dk_u_coefficient: index out of range");
    FieldElement c = Ctx::qt_mono(0, static_cast<long>(n - 1) * (n - k), false);
    if ((n - k) % 2) c = -c;
    for (int s = 0; s < n - k; ++s) c = c * (u - Ctx::qt_mono(0, -s, false));
    return c;
}

std::vector<FieldElement> apply_dk(const PointFn& f, const std::vector<FieldElement>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<FieldElement> dk(n + 1);
    // At u = t^{-j} every coefficient below D_{n-j} vanishes, so the values
    // at the knots resolve D_n, D_{n-1}, ... in turn.
    for (int j = 0; j <= n; ++j) {
        const FieldElement uj = Ctx::qt_mono(0, -j, false);
        FieldElement rest = apply_dstar(f, xs, uj);
        for (int k = n - j + 1; k <= n; ++k)
            rest = rest - dk_u_coefficient(k, n, uj) * dk[k];
        dk[n - j] = rest / dk_u_coefficient(n - j, n, uj);
    }
    return dk;
}

bool check_dk_eigenvalue_identity(Ctx& ctx, const Partition& mu, int n) {
    const FieldElement u = FieldElement::var(vars::U);
    FieldElement rhs(Poly::zero());
    for (int k = 0; k <= n; ++k)
        rhs = rhs + dk_u_coefficient(k, n, u) * ctx.e_star_at_qminus(k, mu, n);
    return dstar_eigenvalue(mu, n, u).equals(rhs);
}

bool check_dk_at(Ctx& ctx, const Partition& mu, int n,
                 const std::vector<FieldElement>& xs) {
    if (static_cast<int>(xs.size()) != n) throw contract_error("check_dk_at: point size");
    std::vector<FieldElement> dk = apply_dk(pstar_point_fn(ctx, mu), xs);
    const FieldElement fv = ctx.eval_pstar(mu, xs, false);
    for (int k = 0; k <= n; ++k)
        if (!dk[k].equals(ctx.e_star_at_qminus(k, mu, n) * fv)) return false;
    return true;
}

std::map<Partition, FieldElement> harish_chandra_table(Ctx& ctx, const OpFn& op,
                                                       const std::vector<Partition>& index,
                                                       int n, Sampler& sampler) {
    std::map<Partition, FieldElement> table;
    for (const Partition& mu : index) {
        if (mu.length() > n)
            throw contract_error("harish_chandra_table: partition longer than n");
        PointFn f = pstar_point_fn(ctx, mu);
        std::vector<FieldElement> x1 = sampler.point(n);
        FieldElement p1 = ctx.eval_pstar(mu, x1, false);
        while (p1.is_zero()) {
            x1 = sampler.point(n);
            p1 = ctx.eval_pstar(mu, x1, false);
        }
        const FieldElement d = op(f, x1) / p1;
        const std::vector<FieldElement> x2 = sampler.point(n);
        if (!op(f, x2).equals(d * ctx.eval_pstar(mu, x2, false)))
            throw contract_error("harish_chandra_table: not an eigenvector: " +
                                 mu.to_string());
        table.emplace(mu, d);
    }
    return table;
}

bool lemma_predicate(const std::vector<int>& xi, unsigned mask) {
    const int n = static_cast<int>(xi.size());
    for (int i = 0; i + 1 < n; ++i)
        if (xi[i] < xi[i + 1]) throw contract_error("lemma_predicate: xi not decreasing");
    std::vector<int> shifted = xi;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) --shifted[i];
    for (int i = 0; i + 1 < n; ++i)
        if (shifted[i] < shifted[i + 1]) return false;
    return true;
}

FieldElement lemma_cross_factor(const std::vector<int>& xi, unsigned mask) {
    const int n = static_cast<int>(xi.size());
    std::vector<FieldElement> xs;
    for (int i = 0; i < n; ++i) {
        Monomial m = Monomial::var(vars::A);
        m.set(vars::Q, xi[i]);
        xs.push_back(FieldElement(Poly::term(Rat(1), m)));
    }
    FieldElement prod(Poly::one());
    for (int i = 1; i <= n; ++i) {
        if (!((mask >> (i - 1)) & 1)) continue;
        for (int j = 1; j <= n; ++j) {
            if ((mask >> (j - 1)) & 1) continue;
            FieldElement num = xs[i - 1] - xs[j - 1] * Ctx::qt_mono(0, i - j + 1, false);
            FieldElement den = xs[i - 1] - xs[j - 1] * Ctx::qt_mono(0, i - j, false);
            prod = prod * (num / den);
        }
    }
    return prod;
}

bool check_lemma(const std::vector<int>& xi, unsigned mask) {
    return !lemma_cross_factor(xi, mask).is_zero() == lemma_predicate(xi, mask);
}

bool check_determinant_form_n2(const FieldElement& f) {
    if (!x_free(f.den())) throw contract_error("check_determinant_form_n2: denominator");
    const FieldElement u = FieldElement::var(vars::U);
    const FieldElement t = FieldElement::var(vars::T);
    const FieldElement one(Poly::one());
    // Row entry E_{ij} g = (1-u x_i)/x_i (1-t x_i)^{j-1} g - (1-x_i)^j /x_i g|_{x_i -> x_i/q}.
    auto entry = [&](int i, int j, const FieldElement& g) {
        const FieldElement xi = FieldElement::var(vars::x(i));
        Subst shift;
        shift.emplace(vars::x(i), xi * Ctx::qt_mono(-1, 0, false));
        return (one - u * xi) / xi * (one - t * xi).pow(j - 1) * g -
               (one - xi).pow(j) / xi * substitute(g, shift);
    };
    FieldElement det = entry(1, 1, entry(2, 2, f)) - entry(1, 2, entry(2, 1, f));
    FieldElement lhs =
        det / (FieldElement::var(vars::x(1)) - FieldElement::var(vars::x(2)));
    PointFn pf = [&f](const std::vector<FieldElement>& vals) { return eval_xs(f, vals); };
    std::vector<FieldElement> xs = {FieldElement::var(vars::x(1)),
                                    FieldElement::var(vars::x(2))};
    return lhs.equals(apply_unshifted(pf, xs, u));
}

bool check_dstar_image_symbolic(Ctx& ctx, const ShiftedSymPoly& f) {
    const int n = f.n;
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::var(vars::x(i)));
    PointFn pf = [&f](const std::vector<FieldElement>& vals) { return eval_xs(f.f, vals); };
    FieldElement g = apply_dstar(pf, xs, FieldElement::var(vars::U));
    if (!x_free(g.den())) return false;
    if (x_total_degree(g.num()) > f.degree()) return false;
    for (int i = 1; i <= n; ++i)
        if (g.num().min_exp_in(vars::x(i)) < 0) return false;
    return is_shifted_symmetric(g, n, Regime::qt);
}

bool check_dstar_image_interpolated(Ctx& ctx, const ShiftedSymPoly& f, int shell) {
    const int n = f.n;
    const int d = f.degree();
    const FieldElement u = FieldElement::var(vars::U);
    PointFn pf = [&f](const std::vector<FieldElement>& vals) { return eval_xs(f.f, vals); };
    KnotFn knot = [&](const Partition& lam) {
        return apply_dstar(pf, knot_qpow(lam, n), u);
    };
    Expansion e = fhat_direct(ctx, knot, d, n);
    FieldElement g = reconstruct(ctx, e, n);
    for (const Partition& kappa : enumerate_partitions(d + shell, n)) {
        if (kappa.size() <= d) continue;
        if (!eval_xs(g, knot_qpow(kappa, n)).equals(knot(kappa))) return false;
    }
    return is_shifted_symmetric(g, n, Regime::qt);
}

}  // namespace macbinom
