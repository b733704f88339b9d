#ifndef MACBINOM_POLY_HPP
#define MACBINOM_POLY_HPP

// Sparse multivariate Laurent polynomials with exact rational coefficients.
// Terms are kept sorted in descending canonical (graded-lex) order with no
// zero coefficients, so structural equality is value equality.

#include <utility>
#include <vector>

#include "macbinom/monomial.hpp"
#include "macbinom/numeric.hpp"

namespace macbinom {

class Poly {
  public:
    struct Term {
        Monomial m;
        Rat c;
    };

    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly constant(Rat c) {
        Poly p;
        if (c != 0) p.t_.push_back({Monomial(), std::move(c)});
        return p;
    }

    static Poly one() { return constant(Rat(1)); }

    static Poly var(int id, int e = 1) { return term(Rat(1), Monomial::var(id, e)); }

    static Poly term(Rat c, const Monomial& m) {
        Poly p;
        if (c != 0) p.t_.push_back({m, std::move(c)});
        return p;
    }

    // Terms must already be canonical (sorted descending, no zeros).
    static Poly from_sorted(std::vector<Term> ts) {
        Poly p;
        p.t_ = std::move(ts);
        return p;
    }

    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_[0].m.is_one());
    }

    bool is_one() const {
        return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1;
    }

    bool is_single_term() const { return t_.size() == 1; }

    // Leading term in the canonical order; polynomial must be nonzero.
    const Term& lt() const {
        if (t_.empty()) throw contract_error("lt of zero polynomial");
        return t_[0];
    }

    // Constant-term coefficient (0 if absent).
    Rat constant_coeff() const;
    Rat coeff(const Monomial& m) const;

    bool operator==(const Poly& o) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly mul_term(const Rat& c, const Monomial& m) const;
    Poly mul_rat(const Rat& c) const { return mul_term(c, Monomial()); }
    Poly mul_mono(const Monomial& m) const { return mul_term(Rat(1), m); }
    Poly pow(unsigned k) const;

    bool uses(int id) const;
    int deg_in(int id) const;      // max exponent of id, 0 for the zero poly
    int min_exp_in(int id) const;  // min exponent of id, 0 for the zero poly
    int total_deg() const;         // max total degree over terms
    int deg_range(int lo, int hi) const;

    // Per-variable minimum exponent over all terms; the Laurent-monomial
    // content.  Identity for the zero polynomial.
    Monomial monomial_content() const;

    bool has_negative_exp() const;

    // gcd of |numerators| / lcm of denominators over all coefficients
    // (positive; 0 for the zero polynomial).
    Rat content() const;

    std::string to_string() const;

  private:
    std::vector<Term> t_;
};

// Exact division; throws contract_error when b does not divide a.
// Both operands must be true polynomials (no negative exponents).
Poly divexact(const Poly& a, const Poly& b);

// Primitive positive-leading multivariate gcd over true polynomials
// (subresultant PRS, recursing through the registry variables).  Inputs may
// have rational coefficients; the result has coprime integer coefficients and
// a positive leading coefficient, and divides both inputs exactly.
Poly gcd(const Poly& a, const Poly& b);

// a with coefficients scaled by 1/content(a): coprime integer coefficients,
// leading sign preserved.
Poly primitive_part(const Poly& a);

// primitive_part with the leading coefficient forced positive.
Poly primitive_positive(const Poly& a);

// Coefficient of v^k in p, with v stripped from the result.
Poly coeff_of_power(const Poly& p, int v, int k);

}  // namespace macbinom

#endif
