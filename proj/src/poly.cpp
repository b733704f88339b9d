#include "macbinom/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace macbinom {

Rat Poly::constant_coeff() const {
    // The constant monomial need not be last (Laurent terms can sort below
    // it), so search for it.
    return coeff(Monomial());
}

Rat Poly::coeff(const Monomial& m) const {
    for (const Term& t : t_)
        if (t.m == m) return t.c;
    return Rat(0);
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.m, -t.c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Rat s = t_[i].c + o.t_[j].c;
            if (s != 0) r.t_.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back({o.t_[j].m, -o.t_[j].c});
            ++j;
        } else {
            Rat s = t_[i].c - o.t_[j].c;
            if (s != 0) r.t_.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) {
        r.t_.push_back({o.t_[j].m, -o.t_[j].c});
    }
    return r;
}

Poly Poly::mul_term(const Rat& c, const Monomial& m) const {
    if (c == 0) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (const Term& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (t_.empty() || o.t_.empty()) return Poly();
    if (t_.size() == 1) return o.mul_term(t_[0].c, t_[0].m);
    if (o.t_.size() == 1) return mul_term(o.t_[0].c, o.t_[0].m);

    std::unordered_map<Monomial, Rat, MonoHash> acc;
    acc.reserve(t_.size() * o.t_.size() / 2 + 8);
    for (const Term& x : t_)
        for (const Term& y : o.t_) {
            auto [it, fresh] = acc.try_emplace(x.m * y.m);
            if (fresh)
                it->second = x.c * y.c;
            else
                it->second += x.c * y.c;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) ts.push_back({m, std::move(c)});
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return mono_after(a.m, b.m); });
    return from_sorted(std::move(ts));
}

Poly Poly::pow(unsigned k) const {
    Poly acc = one();
    Poly b = *this;
    while (k) {
        if (k & 1) acc *= b;
        if (k >>= 1) b *= b;
    }
    return acc;
}

bool Poly::uses(int id) const {
    for (const Term& t : t_)
        if (t.m.exp(id) != 0) return true;
    return false;
}

int Poly::deg_in(int id) const {
    int d = 0;
    bool first = true;
    for (const Term& t : t_) {
        int e = t.m.exp(id);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

int Poly::min_exp_in(int id) const {
    int d = 0;
    bool first = true;
    for (const Term& t : t_) {
        int e = t.m.exp(id);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

int Poly::total_deg() const {
    int d = 0;
    bool first = true;
    for (const Term& t : t_) {
        int e = t.m.total_deg();
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

int Poly::deg_range(int lo, int hi) const {
    int d = 0;
    bool first = true;
    for (const Term& t : t_) {
        int e = t.m.deg_range(lo, hi);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

Monomial Poly::monomial_content() const {
    Monomial m;
    if (t_.empty()) return m;
    m = t_[0].m;
    for (size_t i = 1; i < t_.size(); ++i)
        for (int v = 0; v < vars::kMax; ++v)
            if (t_[i].m.e_[v] < m.e_[v]) m.e_[v] = t_[i].m.e_[v];
    return m;
}

bool Poly::has_negative_exp() const {
    for (const Term& t : t_)
        if (t.m.has_negative()) return true;
    return false;
}

Rat Poly::content() const {
    if (t_.empty()) return Rat(0);
    Int num = 0, den = 1;
    for (const Term& t : t_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    return rat(num, den);
}

Poly primitive_part(const Poly& a) {
    if (a.is_zero()) return a;
    Rat c = a.content();
    return a.mul_rat(Rat(1) / c);
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < t_.size(); ++i) {
        const Term& t = t_[i];
        Rat c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < vars::kMax; ++v) {
            int e = t.m.exp(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars::name(v);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += macbinom::to_string(c);
        } else {
            if (c != 1) {
                out += macbinom::to_string(c) + "*" + mono;
            } else {
                out += mono;
            }
        }
    }
    return out;
}

Poly coeff_of_power(const Poly& p, int v, int k) {
    // Terms stay sorted: removing a common v-power shifts every comparison
    // identically.
    std::vector<Poly::Term> ts;
    for (const Poly::Term& t : p.terms()) {
        if (t.m.exp(v) == k) {
            Poly::Term u = t;
            u.m.set(v, 0);
            ts.push_back(std::move(u));
        }
    }
    return Poly::from_sorted(std::move(ts));
}

}  // namespace macbinom
