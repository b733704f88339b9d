#include "macbinom/field.hpp"

#include <algorithm>
#include <unordered_map>

namespace macbinom {

void FieldElement::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }

    // Pull the Laurent-monomial parts out; gcd machinery wants true polys.
    Monomial mn = num_.monomial_content();
    Monomial md = den_.monomial_content();
    Poly n = num_.mul_mono(Monomial() / mn);
    Poly d = den_.mul_mono(Monomial() / md);
    Monomial carried = mn / md;

    // Rational contents: n = cn * np, d = cd * dp with np, dp primitive
    // integer polynomials.
    Rat cn = n.content();
    Rat cd = d.content();
    Poly np = n.mul_rat(Rat(1) / cn);
    Poly dp = d.mul_rat(Rat(1) / cd);
    Rat scalar = cn / cd;  // positive

    if (!dp.is_constant() && !np.is_constant() &&
        np.size() <= kGcdTermLimit && dp.size() <= kGcdTermLimit) {
        Poly g = gcd(np, dp);
        if (!g.is_one()) {
            np = divexact(np, g);
            dp = divexact(dp, g);
        }
    }

    if (dp.lt().c < 0) {
        np = -np;
        dp = -dp;
    }

    // Reassemble with coprime integer contents on the two sides.
    num_ = np.mul_term(Rat(scalar.get_num()), carried);
    den_ = dp.mul_rat(Rat(scalar.get_den()));
}

bool FieldElement::equals(const FieldElement& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        // Cross-multiply over the lcm of the denominators; pulling the common
        // factor out first keeps the products and the final reduction small.
        Poly g = (den_.is_one() || o.den_.is_one()) ? Poly::one() : gcd(den_, o.den_);
        if (g.is_one()) {
            r.num_ = num_ * o.den_ + o.num_ * den_;
            r.den_ = den_ * o.den_;
        } else {
            Poly da = divexact(den_, g), db = divexact(o.den_, g);
            r.num_ = num_ * db + o.num_ * da;
            r.den_ = den_ * db;
        }
    }
    r.normalize();
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldElement r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw pole_error("division by zero");
    FieldElement r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.normalize();
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw pole_error("inverse of zero");
    FieldElement r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

FieldElement FieldElement::pow(int e) const {
    if (e == 0) return from_int(1);
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    FieldElement acc = from_int(1);
    while (k) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

std::optional<std::pair<Rat, Monomial>> FieldElement::as_term() const {
    if (!den_.is_constant()) return std::nullopt;
    if (num_.is_zero()) return std::make_pair(Rat(0), Monomial());
    if (!num_.is_single_term()) return std::nullopt;
    return std::make_pair(num_.lt().c / den_.lt().c, num_.lt().m);
}

std::optional<Rat> FieldElement::as_rat() const {
    auto t = as_term();
    if (!t || !t->second.is_one()) return std::nullopt;
    return t->first;
}

std::string FieldElement::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// All values are c*monomial: substitute term by term without field overhead.
std::optional<Poly> subst_monomial_fast(const Poly& p,
                                        const std::vector<std::pair<int, std::pair<Rat, Monomial>>>& vals) {
    std::unordered_map<Monomial, Rat, MonoHash> acc;
    acc.reserve(p.size());
    for (const Poly::Term& t : p.terms()) {
        Rat c = t.c;
        // Exponent lookups must see only the original monomial: replacement
        // monomials may use variables that are themselves being substituted.
        Monomial rest = t.m;
        Monomial repl;
        for (const auto& [id, cm] : vals) {
            int e = rest.exp(id);
            if (e == 0) continue;
            rest.set(id, 0);
            if (cm.first == 0) {
                if (e < 0) throw pole_error("substitution hits a pole");
                c = 0;
                break;
            }
            c *= pow_rat(cm.first, e);
            repl = repl * cm.second.pow(e);
        }
        if (c == 0) continue;
        Monomial m = rest * repl;
        auto [it, fresh] = acc.try_emplace(m);
        if (fresh)
            it->second = std::move(c);
        else
            it->second += c;
    }
    std::vector<Poly::Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) ts.push_back({m, std::move(c)});
    std::sort(ts.begin(), ts.end(), [](const Poly::Term& a, const Poly::Term& b) {
        return mono_after(a.m, b.m);
    });
    return Poly::from_sorted(std::move(ts));
}

}  // namespace

FieldElement substitute(const Poly& p, const Subst& s) {
    // Restrict to assignments actually used.
    std::vector<std::pair<int, FieldElement>> used;
    for (const auto& [id, val] : s)
        if (p.uses(id)) used.emplace_back(id, val);
    if (used.empty()) return FieldElement(p);

    bool all_terms = true;
    std::vector<std::pair<int, std::pair<Rat, Monomial>>> terms;
    for (const auto& [id, val] : used) {
        auto t = val.as_term();
        if (!t) {
            all_terms = false;
            break;
        }
        terms.emplace_back(id, *t);
    }
    if (all_terms) {
        auto r = subst_monomial_fast(p, terms);
        return FieldElement(std::move(*r));
    }

    // Generic path: evaluate term by term with field powers.
    FieldElement acc;
    for (const Poly::Term& t : p.terms()) {
        FieldElement term = FieldElement::from_rat(t.c);
        Monomial rest = t.m;
        for (const auto& [id, val] : used) {
            int e = rest.exp(id);
            if (e == 0) continue;
            rest.set(id, 0);
            if (val.is_zero() && e < 0) throw pole_error("substitution hits a pole");
            term *= val.pow(e);
        }
        term *= FieldElement(Poly::term(Rat(1), rest));
        acc += term;
    }
    return acc;
}

FieldElement substitute(const FieldElement& f, const Subst& s) {
    FieldElement n = substitute(f.num(), s);
    FieldElement d = substitute(f.den(), s);
    if (d.is_zero()) throw pole_error("substitution hits a pole");
    return n / d;
}

FieldElement fraction_sum(std::vector<std::pair<Poly, Poly>> parts) {
    Poly lcm = Poly::one();
    for (auto& [n, d] : parts) {
        if (d.is_zero()) throw pole_error("zero denominator");
        // Fold the rational unit of d into n; lcm arithmetic needs
        // integer-primitive denominators.
        Rat c = d.content();
        if (d.lt().c < 0) c = -c;
        if (c != Rat(1)) {
            d = d.mul_rat(Rat(1) / c);
            n = n.mul_rat(Rat(1) / c);
        }
        if (d.is_one()) continue;
        Poly g = gcd(lcm, d);
        lcm = lcm * (g.is_one() ? d : divexact(d, g));
    }
    Poly acc;
    for (auto& [n, d] : parts) {
        if (n.is_zero()) continue;
        Poly scale = d.is_one() ? lcm : divexact(lcm, d);
        acc = acc + (scale.is_one() ? std::move(n) : n * scale);
    }
    return FieldElement(std::move(acc), std::move(lcm));
}

Subst regime_inverse_qt() {
    Subst s;
    s[vars::Q] = FieldElement::var(vars::Q, -1);
    s[vars::T] = FieldElement::var(vars::T, -1);
    return s;
}

}  // namespace macbinom
