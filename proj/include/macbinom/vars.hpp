#ifndef MACBINOM_VARS_HPP
#define MACBINOM_VARS_HPP

// Fixed variable registry.  The slot order (q, t, a, u, theta, x1..x11) is
// also the significance order of the canonical graded-lex term order and the
// display order of every renderer, so it must never change.

#include <string>

#include "macbinom/numeric.hpp"

namespace macbinom::vars {

inline constexpr int Q = 0;
inline constexpr int T = 1;
inline constexpr int A = 2;
inline constexpr int U = 3;
inline constexpr int THETA = 4;
inline constexpr int X0 = 5;       // slot of x1
inline constexpr int kMax = 16;    // total slots
inline constexpr int kMaxX = kMax - X0;

// 1-based x_i.
inline int x(int i) {
    if (i < 1 || i > kMaxX)
        throw contract_error("x index out of range: " + std::to_string(i));
    return X0 + i - 1;
}

inline bool is_x(int id) { return id >= X0 && id < kMax; }

inline std::string name(int id) {
    switch (id) {
        case Q: return "q";
        case T: return "t";
        case A: return "a";
        case U: return "u";
        case THETA: return "theta";
        default:
            if (is_x(id)) return "x" + std::to_string(id - X0 + 1);
            throw contract_error("bad variable id");
    }
}

// Returns -1 when the token is not a registered variable.
inline int id_of(const std::string& s) {
    if (s == "q") return Q;
    if (s == "t") return T;
    if (s == "a") return A;
    if (s == "u") return U;
    if (s == "theta" || s == "θ") return THETA;
    if (s.size() >= 2 && s[0] == 'x') {
        int i = 0;
        for (size_t k = 1; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') return -1;
            i = i * 10 + (s[k] - '0');
        }
        if (i >= 1 && i <= kMaxX) return X0 + i - 1;
    }
    return -1;
}

}  // namespace macbinom::vars

#endif
