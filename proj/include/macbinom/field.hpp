#ifndef MACBINOM_FIELD_HPP
#define MACBINOM_FIELD_HPP

// The exact coefficient field: quotients of sparse integer-coefficient
// Laurent polynomials.  Normal form (whenever both sides are below the gcd
// size threshold):
//   * den is a true polynomial, no monomial content, positive leading
//     coefficient, integer coefficients;
//   * num is an integer Laurent polynomial carrying the whole monomial part;
//   * gcd(primitive true part of num, den) = 1 and the integer contents of
//     num and den are coprime.
// Above the threshold only the cheap steps run (monomial + content
// extraction, sign); equality stays exact through cross-multiplication.

#include <map>
#include <optional>
#include <string>

#include "macbinom/poly.hpp"

namespace macbinom {

// Full gcd reduction is attempted only when both operands have at most this
// many terms.  An emergency valve, not a tuning knob: unreduced fractions
// snowball, so this should stay far above anything a normal run produces.
inline constexpr size_t kGcdTermLimit = 500000;

class FieldElement {
  public:
    FieldElement() : num_(Poly::zero()), den_(Poly::one()) {}

    explicit FieldElement(Poly num) : num_(std::move(num)), den_(Poly::one()) {
        normalize();
    }

    FieldElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw pole_error("zero denominator");
        normalize();
    }

    static FieldElement from_rat(const Rat& r) { return FieldElement(Poly::constant(r)); }
    static FieldElement from_int(long v) { return from_rat(Rat(v)); }
    static FieldElement var(int id, int e = 1) {
        return FieldElement(Poly::term(Rat(1), Monomial::var(id, e)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // Exact value equality via cross-multiplication; independent of
    // normalization state.
    bool equals(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const { return equals(o); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;
    FieldElement pow(int e) const;

    bool uses(int id) const { return num_.uses(id) || den_.uses(id); }

    // If the value is c * monomial (den constant folded in), return it.
    std::optional<std::pair<Rat, Monomial>> as_term() const;
    std::optional<Rat> as_rat() const;

    std::string to_string() const;

  private:
    void normalize();

    Poly num_, den_;
};

// Sum of num/den pairs over the lcm of the denominators, normalized once at
// the end.  Far cheaper than a chain of operator+ when many parts share
// denominator factors.  Denominators must be true (non-Laurent) polynomials.
FieldElement fraction_sum(std::vector<std::pair<Poly, Poly>> parts);

// Substitution map: variable id -> value.  Unmapped variables persist.
using Subst = std::map<int, FieldElement>;

// Evaluates p with the given assignments; throws pole_error when a negative
// power of a vanishing value is required.
FieldElement substitute(const Poly& p, const Subst& s);
FieldElement substitute(const FieldElement& f, const Subst& s);

// Convenience substitutions used throughout: q -> 1/q, t -> 1/t.
Subst regime_inverse_qt();

}  // namespace macbinom

#endif
