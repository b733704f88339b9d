#include "macbinom/binom.hpp"

#include <algorithm>

namespace macbinom {

namespace {

FieldElement qvar() { return FieldElement::var(vars::Q); }
FieldElement tvar() { return FieldElement::var(vars::T); }
FieldElement avar() { return FieldElement::var(vars::A); }
FieldElement one() { return FieldElement::from_int(1); }

// One-variable interpolation polynomial (x - 1)(x - base)...(x - base^{l-1}).
FieldElement falling(int l, const FieldElement& x, const FieldElement& base) {
    FieldElement r = one();
    for (int j = 0; j < l; ++j) r *= x - base.pow(j);
    return r;
}

// (z; q)_r with the ambient symbolic q.
FieldElement qpoch(const FieldElement& z, int r) {
    FieldElement r_ = one();
    for (int j = 0; j < r; ++j) r_ *= one() - Ctx::qt_mono(j, 0, false) * z;
    return r_;
}

Subst swap_invert_qt() {
    Subst s;
    s[vars::Q] = FieldElement::var(vars::T, -1);
    s[vars::T] = FieldElement::var(vars::Q, -1);
    return s;
}

}  // namespace

FieldElement gauss_binom(int l, int m, const FieldElement& base) {
    if (m < 0) return FieldElement();
    FieldElement num = one(), den = one();
    for (int i = 0; i < m; ++i) {
        num *= base.pow(l) - base.pow(i);
        den *= base.pow(m) - base.pow(i);
    }
    return num / den;
}

bool check_power_expansion(int l) {
    FieldElement x = FieldElement::var(vars::x(1)), q = qvar();
    FieldElement rhs;
    for (int m = 0; m <= l; ++m) rhs += gauss_binom(l, m, q) * falling(m, x, q);
    return x.pow(l).equals(rhs);
}

bool check_factorial_expansion(int l) {
    FieldElement x = FieldElement::var(vars::x(1)), q = qvar();
    FieldElement lhs = falling(l, x, q) * Ctx::qt_mono(-(long)l * (l - 1) / 2, 0, false);
    FieldElement rhs;
    for (int m = 0; m <= l; ++m) {
        FieldElement term = gauss_binom(l, m, q.inverse()) * x.pow(m) *
                            Ctx::qt_mono(-(long)m * (m - 1) / 2, 0, false);
        rhs += (l - m) % 2 ? -term : term;
    }
    return lhs.equals(rhs);
}

bool check_one_var_binomial(int l) {
    FieldElement x = FieldElement::var(vars::x(1)), q = qvar(), a = avar();
    FieldElement lhs = falling(l, a * x, q) / falling(l, a, q);
    FieldElement rhs;
    for (int m = 0; m <= l; ++m)
        rhs += a.pow(m) * gauss_binom(l, m, q.inverse()) * falling(m, x, q.inverse()) /
               falling(m, a, q);
    return lhs.equals(rhs);
}

bool check_one_var_coefficient(Ctx& ctx, int l) {
    FieldElement q = qvar();
    for (int m = 0; m <= l; ++m) {
        Partition lam({l}), mu(m ? std::vector<int>{m} : std::vector<int>{});
        if (!gauss_binom(l, m, q.inverse()).equals(ctx.binom(lam, mu, true))) return false;
        if (!gauss_binom(l, m, q).equals(ctx.binom(lam, mu, false))) return false;
    }
    return true;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Partition& mu :
         enumerate_partitions(lambda.size(), std::max(lambda.length(), 1)))
        if (lambda.contains(mu)) out.push_back(mu);
    return out;
}

Partition intersect_partitions(const Partition& a, const Partition& b) {
    std::vector<int> p;
    for (int i = 1; i <= std::min(a.length(), b.length()); ++i)
        p.push_back(std::min(a.part(i), b.part(i)));
    return Partition(p);
}

namespace {

std::vector<FieldElement> x_vars(int n) {
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::var(vars::x(i)));
    return xs;
}

std::vector<FieldElement> reversed(std::vector<FieldElement> xs) {
    std::reverse(xs.begin(), xs.end());
    return xs;
}

// x_i t^{1-i}, the substitution entering both limit forms.
std::vector<FieldElement> x_vars_tshift(int n) {
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i)
        xs.push_back(FieldElement::var(vars::x(i)) * Ctx::qt_mono(0, 1 - i, false));
    return xs;
}

}  // namespace

bool check_binomial_theorem(Ctx& ctx, const Partition& lambda, int n) {
    if (lambda.length() > n) throw contract_error("more rows than variables");
    FieldElement a = avar();
    std::vector<FieldElement> xs = x_vars(n), axs;
    for (const FieldElement& x : xs) axs.push_back(a * x);
    FieldElement lhs =
        ctx.eval_pstar(lambda, axs, false) / ctx.pstar_at_constant(lambda, n, a, false);
    FieldElement rhs;
    for (const Partition& mu : subpartitions(lambda)) {
        FieldElement term = a.pow(mu.size()) *
                            Ctx::qt_mono(0, -(long)(n - 1) * mu.size(), false) *
                            ctx.binom(lambda, mu, true) *
                            ctx.eval_pstar(mu, reversed(xs), true) /
                            ctx.pstar_at_constant(mu, n, a, false);
        rhs += term;
    }
    return lhs.equals(rhs);
}

bool check_binomial_alt(Ctx& ctx, const Partition& lambda, int n) {
    if (lambda.length() > n) throw contract_error("more rows than variables");
    FieldElement a = avar();
    std::vector<FieldElement> xs = x_vars(n), axs;
    for (const FieldElement& x : xs) axs.push_back(a * x);
    FieldElement lhs =
        ctx.eval_pstar(lambda, axs, false) / ctx.pstar_at_constant(lambda, n, a, false);
    FieldElement rhs;
    for (const Partition& mu : subpartitions(lambda)) {
        FieldElement term = Ctx::qt_mono(-mu.conjugate().n_stat(), mu.n_stat(), false) *
                            ctx.binom(lambda, mu, true) *
                            ctx.eval_pstar(mu, reversed(xs), true) /
                            ctx.pstar_at_constant(mu, n, a.inverse(), true);
        rhs += mu.size() % 2 ? -term : term;
    }
    return lhs.equals(rhs);
}

bool check_constant_reflection(Ctx& ctx, const Partition& mu, int n) {
    if (mu.length() > n) throw contract_error("more rows than variables");
    FieldElement a = avar();
    FieldElement lhs = ctx.pstar_at_constant(mu, n, a, false);
    FieldElement sign = mu.size() % 2 ? -one() : one();
    FieldElement rhs = sign * a.pow(mu.size()) *
                       Ctx::qt_mono(mu.conjugate().n_stat(),
                                    -mu.n_stat() - (long)mu.size() * (n - 1), false) *
                       ctx.pstar_at_constant(mu, n, a.inverse(), true);
    return lhs.equals(rhs);
}

bool check_macdonald_limit(Ctx& ctx, const Partition& lambda, int n) {
    if (lambda.length() > n) throw contract_error("more rows than variables");
    std::vector<FieldElement> xs = x_vars(n);
    FieldElement lhs = ctx.eval_macdonald(lambda, x_vars_tshift(n), false) /
                       ctx.principal_special(lambda, n, false);
    FieldElement rhs;
    for (const Partition& mu : subpartitions(lambda))
        rhs += ctx.binom(lambda, mu, false) * ctx.eval_pstar(mu, xs, false) /
               ctx.principal_special(mu, n, false);
    return lhs.equals(rhs);
}

bool check_zero_limit(Ctx& ctx, const Partition& lambda, int n) {
    if (lambda.length() > n) throw contract_error("more rows than variables");
    std::vector<FieldElement> xs = x_vars(n), xst = x_vars_tshift(n);
    FieldElement zero;
    FieldElement lhs =
        ctx.eval_pstar(lambda, xs, false) / ctx.pstar_at_constant(lambda, n, zero, false);
    FieldElement rhs;
    for (const Partition& mu : subpartitions(lambda))
        rhs += ctx.binom(lambda, mu, true) * ctx.eval_macdonald(mu, xst, false) /
               ctx.pstar_at_constant(mu, n, zero, false);
    return lhs.equals(rhs);
}

FieldElement s_entry(Ctx& ctx, const Partition& lambda, const Partition& nu, int n,
                     const FieldElement& a) {
    if (lambda.length() > n || nu.length() > n)
        throw contract_error("more rows than variables");
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i)
        xs.push_back(a * Ctx::qt_mono(-nu.part(n + 1 - i), 0, false));
    return ctx.eval_pstar(lambda, xs, false) / ctx.pstar_at_constant(lambda, n, a, false);
}

bool check_s_symmetry_pair(Ctx& ctx, const Partition& lambda, const Partition& nu, int n) {
    FieldElement a = avar();
    return s_entry(ctx, lambda, nu, n, a).equals(s_entry(ctx, nu, lambda, n, a));
}

bool check_gauss_pair(Ctx& ctx, const Partition& lambda, const Partition& nu, int n) {
    FieldElement a = avar();
    FieldElement lhs = s_entry(ctx, lambda, nu, n, a);
    FieldElement rhs;
    for (const Partition& mu : subpartitions(intersect_partitions(lambda, nu))) {
        FieldElement diag = Ctx::qt_mono(mu.conjugate().n_stat(), -mu.n_stat(), true) *
                            ctx.eval_pstar_qlambda(mu, mu, true) /
                            ctx.pstar_at_constant(mu, n, a.inverse(), true);
        if (mu.size() % 2) diag = -diag;
        rhs += ctx.binom(lambda, mu, true) * diag * ctx.binom(nu, mu, true);
    }
    return lhs.equals(rhs);
}

FieldElement trinomial(Ctx& ctx, int b, int n, const Partition& lambda,
                       const Partition& nu, bool inv) {
    Partition beta(std::vector<int>(n, b));
    if (!beta.contains(lambda) || !beta.contains(nu))
        throw contract_error("argument escapes the box");
    return ctx.binom(beta, nu, inv) * ctx.binom(complement(b, n, nu), lambda, inv);
}

bool check_symmetry2(Ctx& ctx, int b, int n, const Partition& lambda, const Partition& nu) {
    return trinomial(ctx, b, n, lambda, nu).equals(trinomial(ctx, b, n, nu, lambda));
}

bool check_complement_reflection(Ctx& ctx, int b, int n, const Partition& nu) {
    Partition beta(std::vector<int>(n, b));
    return ctx.binom(beta, nu).equals(ctx.binom(beta, complement(b, n, nu)));
}

bool check_bt2(Ctx& ctx, int b, int n, const Partition& lambda, const Partition& nu) {
    Partition beta(std::vector<int>(n, b));
    FieldElement lhs = trinomial(ctx, b, n, lambda, nu);
    FieldElement sum;
    for (const Partition& mu : subpartitions(intersect_partitions(lambda, nu))) {
        FieldElement term = Ctx::qt_mono(-mu.conjugate().n_stat(), mu.n_stat(), false) *
                            ctx.binom(lambda, mu, true) * ctx.binom(nu, mu, true) /
                            ctx.binom(beta, mu, true);
        sum += mu.size() % 2 ? -term : term;
    }
    FieldElement rhs = ctx.binom(beta, lambda) * ctx.binom(beta, nu) * sum;
    return lhs.equals(rhs);
}

bool check_inversion_pair(Ctx& ctx, const Partition& lambda, const Partition& nu) {
    FieldElement sum;
    for (const Partition& mu : subpartitions(lambda)) {
        if (!mu.contains(nu)) continue;
        FieldElement term = Ctx::qt_mono(mu.conjugate().n_stat(), -mu.n_stat(), false) *
                            ctx.binom(lambda, mu, false) * ctx.binom(mu, nu, true);
        sum += mu.size() % 2 ? -term : term;
    }
    FieldElement scale = Ctx::qt_mono(-nu.conjugate().n_stat(), nu.n_stat(), false);
    if (nu.size() % 2) scale = -scale;
    FieldElement expected = lambda == nu ? one() : FieldElement();
    return (scale * sum).equals(expected);
}

bool check_duality(Ctx& ctx, const Partition& lambda, const Partition& mu) {
    FieldElement lhs = ctx.binom(lambda, mu, false);
    FieldElement rhs =
        substitute(ctx.binom(lambda.conjugate(), mu.conjugate(), false), swap_invert_qt());
    return lhs.equals(rhs);
}

bool check_genfunc_ecol(Ctx& ctx, int n, int K) {
    FieldElement v = FieldElement::var(vars::U);
    Series lhs = Series::one(K);
    for (int i = 1; i <= n; ++i) {
        FieldElement xi = FieldElement::var(vars::x(i));
        FieldElement factor = (one() + xi * Ctx::qt_mono(0, 1 - i, false) * v) /
                              (one() + Ctx::qt_mono(0, 1 - i, false) * v);
        lhs *= Series::expand(factor, vars::U, K);
    }
    Series rhs(K);
    for (int k = 0; k <= K; ++k) {
        ShiftedSymPoly ek = ctx.e_star(k, n);
        if (ek.is_zero()) continue;
        FieldElement den = one();
        for (int j = 0; j < k; ++j) den *= one() + v * Ctx::qt_mono(0, -j, false);
        rhs += Series::expand(ek.f * v.pow(k) / den, vars::U, K);
    }
    return lhs.equals(rhs);
}

bool check_genfunc_hrow(Ctx& ctx, int n, int K) {
    FieldElement v = FieldElement::var(vars::U);
    auto poch_ratio = [&](int m) {  // (t;q)_m / (q;q)_m
        return qpoch(tvar(), m) / qpoch(qvar(), m);
    };
    // Binomial-series expansion of (t z; q)_oo / (z; q)_oo in powers of v,
    // where z = c v.
    auto base_series = [&](const FieldElement& c, int K_) {
        Series s(K_);
        for (int m = 0; m <= K_; ++m) s.coeff(m) = poch_ratio(m) * c.pow(m);
        return s;
    };
    Series lhs = Series::one(K);
    for (int i = 1; i <= n; ++i) {
        FieldElement xi = FieldElement::var(vars::x(i));
        lhs *= base_series(xi * Ctx::qt_mono(0, -i, false), K);
        lhs *= base_series(Ctx::qt_mono(0, -i, false), K).inverse();
    }
    Series rhs(K);
    for (int k = 0; k <= K; ++k) {
        ShiftedSymPoly hk = ctx.h_star(k, n);
        FieldElement den = one();
        for (int j = 0; j < k; ++j) den *= one() - Ctx::qt_mono(j, 0, false) * v;
        // Expand the x-free tail v^k / den first and scale afterwards, so the
        // large numerator of h*_k never enters the series division.
        Series tail = Series::expand(v.pow(k) / den, vars::U, K);
        FieldElement scale = Ctx::qt_mono(0, -k, false) * poch_ratio(k);
        Series term(K);
        for (int m = k; m <= K; ++m) {
            if (tail.coeff(m).is_zero()) continue;
            FieldElement c = scale * tail.coeff(m);
            term.coeff(m) = FieldElement(c.num() * hk.f.num(), c.den() * hk.f.den());
        }
        rhs += term;
    }
    return lhs.equals(rhs);
}

}  // namespace macbinom
