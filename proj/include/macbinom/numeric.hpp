#ifndef MACBINOM_NUMERIC_HPP
#define MACBINOM_NUMERIC_HPP

// Exact rational scalars on top of GMP, plus the error taxonomy shared by
// every module.  All arithmetic in this project is exact; nothing here may
// round.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace macbinom {

using Int = mpz_class;
using Rat = mpq_class;

// Base class so callers can catch everything from this library at once.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (partition strings, polynomial grammar, JSON).
struct parse_error : error {
    using error::error;
};

// A substitution hit a zero denominator (or needed the inverse of zero).
struct pole_error : error {
    using error::error;
};

// A documented precondition was violated by the caller.
struct contract_error : error {
    using error::error;
};

// A linear system that should have been uniquely solvable was not.
struct singular_error : error {
    using error::error;
};

// mpq_class(n, d) does not canonicalize; this always does.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw pole_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw pole_error("rational with zero denominator");
    Rat r(num);
    r /= Rat(den);
    return r;
}

// Accepts "p" or "p/q", arbitrary precision.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    if (r.get_den() == 0) throw pole_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw pole_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace macbinom

#endif
