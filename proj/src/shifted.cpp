#include "macbinom/shifted.hpp"

#include "macbinom/vars.hpp"

namespace macbinom {

ShiftedSymPoly::ShiftedSymPoly(int n_, FieldElement f_) : n(n_), f(std::move(f_)) {
    if (!x_free(f.den())) throw contract_error("denominator must not involve x");
    if (max_x_index(f.num()) > n) throw contract_error("polynomial uses more x variables than declared");
}

int ShiftedSymPoly::degree() const { return x_total_degree(f.num()); }

int x_total_degree(const Poly& p) {
    int best = 0;
    for (const auto& term : p.terms()) {
        int d = 0;
        for (int i = 1; i <= vars::kMaxX; ++i) d += term.m.exp(vars::x(i));
        if (d > best) best = d;
    }
    return best;
}

bool x_free(const Poly& p) {
    for (int i = 1; i <= vars::kMaxX; ++i)
        if (p.uses(vars::x(i))) return false;
    return true;
}

int max_x_index(const Poly& p) {
    for (int i = vars::kMaxX; i >= 1; --i)
        if (p.uses(vars::x(i))) return i;
    return 0;
}

FieldElement x_top_layer(const FieldElement& f) {
    if (!x_free(f.den())) throw contract_error("denominator must not involve x");
    const Poly& num = f.num();
    int top = x_total_degree(num);
    std::vector<Poly::Term> keep;
    for (const auto& term : num.terms()) {
        int d = 0;
        for (int i = 1; i <= vars::kMaxX; ++i) d += term.m.exp(vars::x(i));
        if (d == top) keep.push_back(term);
    }
    return FieldElement(Poly::from_sorted(std::move(keep)), f.den());
}

Subst swap_adjacent(Regime r, int i) {
    Subst s;
    FieldElement xi = FieldElement::var(vars::x(i));
    FieldElement xj = FieldElement::var(vars::x(i + 1));
    if (r == Regime::qt) {
        // y_i = x_i t^{-i}: y_i <-> y_{i+1} means x_i -> x_{i+1}/t, x_{i+1} -> x_i*t.
        FieldElement t = FieldElement::var(vars::T);
        s[vars::x(i)] = xj * t.inverse();
        s[vars::x(i + 1)] = xi * t;
    } else {
        // y_i = x_i - theta*i: x_i -> x_{i+1} - theta, x_{i+1} -> x_i + theta.
        FieldElement th = FieldElement::var(vars::THETA);
        s[vars::x(i)] = xj - th;
        s[vars::x(i + 1)] = xi + th;
    }
    return s;
}

bool is_shifted_symmetric(const FieldElement& f, int n, Regime r) {
    for (int i = 1; i < n; ++i) {
        FieldElement swapped = substitute(f, swap_adjacent(r, i));
        if (!swapped.equals(f)) return false;
    }
    return true;
}

FieldElement eval_xs(const FieldElement& f, const std::vector<FieldElement>& xs) {
    Subst s;
    for (size_t i = 0; i < xs.size(); ++i) s[vars::x(static_cast<int>(i) + 1)] = xs[i];
    FieldElement out = substitute(f, s);
    if (max_x_index(out.num()) > static_cast<int>(xs.size()) ||
        max_x_index(out.den()) > static_cast<int>(xs.size()))
        throw contract_error("evaluation left unbound x variables");
    return out;
}

std::vector<FieldElement> knot_qpow(const Partition& lambda, int n) {
    std::vector<FieldElement> xs;
    xs.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::var(vars::Q).pow(lambda.part(i)));
    return xs;
}

std::vector<FieldElement> knot_qpow_inv(const Partition& lambda, int n) {
    std::vector<FieldElement> xs;
    xs.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::var(vars::Q).pow(-lambda.part(i)));
    return xs;
}

std::vector<FieldElement> knot_integers(const Partition& lambda, int n) {
    std::vector<FieldElement> xs;
    xs.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) xs.push_back(FieldElement::from_int(lambda.part(i)));
    return xs;
}

}  // namespace macbinom
