#ifndef MACBINOM_MONOMIAL_HPP
#define MACBINOM_MONOMIAL_HPP

// Exponent vectors over the fixed registry.  Negative exponents are legal
// (Laurent monomials); q,t,a,u,theta and, transiently, x_i all use them.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "macbinom/vars.hpp"

namespace macbinom {

class Monomial {
  public:
    Monomial() = default;

    static Monomial var(int id, int e = 1) {
        Monomial m;
        m.set(id, e);
        return m;
    }

    int exp(int id) const { return e_[id]; }

    void set(int id, int e) {
        if (e != static_cast<int16_t>(e))
            throw contract_error("monomial exponent overflow");
        e_[id] = static_cast<int16_t>(e);
    }

    bool is_one() const {
        for (int16_t v : e_)
            if (v) return false;
        return true;
    }

    bool has_negative() const {
        for (int16_t v : e_)
            if (v < 0) return true;
        return false;
    }

    int total_deg() const {
        int d = 0;
        for (int16_t v : e_) d += v;
        return d;
    }

    // Degree restricted to slots [lo, hi).
    int deg_range(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i) d += e_[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < vars::kMax; ++i) {
            int v = int(e_[i]) + int(o.e_[i]);
            if (v != static_cast<int16_t>(v))
                throw contract_error("monomial exponent overflow");
            r.e_[i] = static_cast<int16_t>(v);
        }
        return r;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < vars::kMax; ++i) {
            int v = int(e_[i]) - int(o.e_[i]);
            if (v != static_cast<int16_t>(v))
                throw contract_error("monomial exponent overflow");
            r.e_[i] = static_cast<int16_t>(v);
        }
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        for (int i = 0; i < vars::kMax; ++i) {
            int v = int(e_[i]) * k;
            if (v != static_cast<int16_t>(v))
                throw contract_error("monomial exponent overflow");
            r.e_[i] = static_cast<int16_t>(v);
        }
        return r;
    }

    // Componentwise <=, the divisibility test for true (non-Laurent) monomials.
    bool divides(const Monomial& o) const {
        for (int i = 0; i < vars::kMax; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    // Canonical order: graded lex, total degree first, then slot 0 (= q) most
    // significant.  Returns <0, 0, >0 like memcmp.
    static int cmp(const Monomial& a, const Monomial& b) {
        int da = a.total_deg(), db = b.total_deg();
        if (da != db) return da < db ? -1 : 1;
        for (int i = 0; i < vars::kMax; ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        return 0;
    }

    size_t hash() const {
        // FNV over the four 64-bit words of the exponent array.
        const uint64_t* w = reinterpret_cast<const uint64_t*>(e_.data());
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < 4; ++i) {
            h ^= w[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

    std::array<int16_t, vars::kMax> e_{};
};

struct MonoHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline bool mono_after(const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b) > 0;  // descending storage order
}

}  // namespace macbinom

#endif
