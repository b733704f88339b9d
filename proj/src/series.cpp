#include "macbinom/series.hpp"

namespace macbinom {

Series Series::expand(const FieldElement& f, int v, int K) {
    Series out(K);
    if (f.is_zero()) return out;

    const int nlo = f.num().min_exp_in(v);
    const int dlo = f.den().min_exp_in(v);
    const int shift = nlo - dlo;
    if (shift < 0) throw pole_error("expression has a pole at the expansion point");
    if (shift > K) return out;  // vanishes to the requested order

    // Coefficient polynomials relative to the lowest exponents.
    const int nhi = f.num().deg_in(v);
    const int dhi = f.den().deg_in(v);
    std::vector<FieldElement> N, D;
    for (int k = nlo; k <= nhi && k - nlo + shift <= K; ++k)
        N.push_back(FieldElement(coeff_of_power(f.num(), v, k)));
    for (int k = dlo; k <= dhi && k - dlo <= K; ++k)
        D.push_back(FieldElement(coeff_of_power(f.den(), v, k)));

    // D[0] is nonzero by minimality of dlo; long division.
    FieldElement d0inv = D[0].inverse();
    std::vector<FieldElement> c(static_cast<size_t>(K - shift) + 1);
    for (size_t k = 0; k < c.size(); ++k) {
        std::vector<std::pair<Poly, Poly>> parts;
        if (k < N.size()) parts.emplace_back(N[k].num(), N[k].den());
        for (size_t j = 1; j <= k && j < D.size(); ++j)
            parts.emplace_back(-(D[j].num() * c[k - j].num()), D[j].den() * c[k - j].den());
        c[k] = fraction_sum(std::move(parts)) * d0inv;
    }
    for (size_t k = 0; k < c.size(); ++k) out.c_[k + static_cast<size_t>(shift)] = std::move(c[k]);
    return out;
}

Series Series::operator+(const Series& o) const {
    if (order() != o.order()) throw contract_error("series order mismatch");
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

Series Series::operator-(const Series& o) const {
    if (order() != o.order()) throw contract_error("series order mismatch");
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

Series Series::operator*(const Series& o) const {
    if (order() != o.order()) throw contract_error("series order mismatch");
    Series r(order());
    for (int k = 0; k <= order(); ++k) {
        std::vector<std::pair<Poly, Poly>> parts;
        for (int i = 0; i <= k; ++i) {
            if (c_[i].is_zero() || o.c_[k - i].is_zero()) continue;
            parts.emplace_back(c_[i].num() * o.c_[k - i].num(),
                               c_[i].den() * o.c_[k - i].den());
        }
        r.c_[k] = fraction_sum(std::move(parts));
    }
    return r;
}

Series Series::inverse() const {
    if (c_[0].is_zero()) throw pole_error("series with zero constant term has no inverse");
    Series r(order());
    FieldElement d0inv = c_[0].inverse();
    r.c_[0] = d0inv;
    for (int k = 1; k <= order(); ++k) {
        std::vector<std::pair<Poly, Poly>> parts;
        for (int j = 1; j <= k; ++j)
            parts.emplace_back(-(c_[j].num() * r.c_[k - j].num()),
                               c_[j].den() * r.c_[k - j].den());
        r.c_[k] = fraction_sum(std::move(parts)) * d0inv;
    }
    return r;
}

bool Series::equals(const Series& o) const {
    if (order() != o.order()) return false;
    for (int k = 0; k <= order(); ++k)
        if (!c_[k].equals(o.c_[k])) return false;
    return true;
}

bool Series::is_zero() const {
    for (const FieldElement& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace macbinom
