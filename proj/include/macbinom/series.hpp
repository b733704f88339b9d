#ifndef MACBINOM_SERIES_HPP
#define MACBINOM_SERIES_HPP

// Truncated formal power series in a single formal variable with field
// coefficients.  The generating-function identities are expansions in 1/u;
// callers substitute u -> 1/u first, after which the u slot itself serves as
// the formal variable.

#include <vector>

#include "macbinom/field.hpp"

namespace macbinom {

class Series {
  public:
    // Zero series truncated at order K.
    explicit Series(int K) : c_(static_cast<size_t>(K) + 1) {}

    static Series one(int K) {
        Series s(K);
        s.c_[0] = FieldElement::from_int(1);
        return s;
    }

    // Expansion of f around v = 0 through order K.  Throws pole_error when f
    // has a pole at v = 0 (denominator valuation exceeding the numerator's).
    static Series expand(const FieldElement& f, int v, int K);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const FieldElement& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    FieldElement& coeff(int k) { return c_[static_cast<size_t>(k)]; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series& operator+=(const Series& o) { return *this = *this + o; }

    // Multiplicative inverse; requires an invertible constant term.
    Series inverse() const;

    bool equals(const Series& o) const;
    bool is_zero() const;

  private:
    std::vector<FieldElement> c_;  // c_[k] multiplies v^k
};

}  // namespace macbinom

#endif
