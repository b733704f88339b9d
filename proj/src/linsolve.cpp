#include "macbinom/linsolve.hpp"

#include "macbinom/vars.hpp"

#include <limits>

namespace macbinom {

namespace {

// Clear one augmented row to true polynomial entries: common denominator,
// then divide out the per-row Laurent monomial content.
std::vector<Poly> clear_row(const std::vector<FieldElement>& row) {
    Poly common = Poly::one();
    for (const auto& e : row)
        if (!e.den().is_one()) common = common * e.den();
    std::vector<Poly> out;
    out.reserve(row.size());
    for (const auto& e : row) {
        Poly p = e.num();
        if (!common.is_one()) p = p * divexact(common, e.den());
        out.push_back(std::move(p));
    }
    // Laurent content: componentwise minimum exponent across the row.
    Monomial shift;
    bool any = false;
    for (const auto& p : out) {
        if (p.is_zero()) continue;
        Monomial c = p.monomial_content();
        if (!any) {
            shift = c;
            any = true;
        } else {
            for (int v = 0; v < vars::kMax; ++v)
                if (c.exp(v) < shift.exp(v)) shift.set(v, c.exp(v));
        }
    }
    if (any && !shift.is_one()) {
        Monomial inv = Monomial().operator/(shift);
        for (auto& p : out) p = p.mul_term(Rat(1), inv);
    }
    return out;
}

}  // namespace

std::vector<FieldElement> solve_square(std::vector<std::vector<FieldElement>> A,
                                       std::vector<FieldElement> b) {
    const size_t m = A.size();
    if (b.size() != m) throw contract_error("system shape mismatch");
    if (m == 0) return {};
    std::vector<std::vector<Poly>> M;
    M.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        if (A[i].size() != m) throw contract_error("system shape mismatch");
        std::vector<FieldElement> row = std::move(A[i]);
        row.push_back(b[i]);
        M.push_back(clear_row(row));
    }

    Poly prev = Poly::one();
    for (size_t k = 0; k < m; ++k) {
        size_t pivot = m;
        size_t best = std::numeric_limits<size_t>::max();
        for (size_t r = k; r < m; ++r) {
            if (M[r][k].is_zero()) continue;
            if (M[r][k].size() < best) {
                best = M[r][k].size();
                pivot = r;
            }
        }
        if (pivot == m) throw singular_error("singular linear system");
        if (pivot != k) std::swap(M[pivot], M[k]);
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j <= m; ++j)
                M[i][j] = divexact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = Poly::zero();
        }
        prev = M[k][k];
    }

    std::vector<FieldElement> c(m);
    for (size_t ii = m; ii-- > 0;) {
        FieldElement acc(M[ii][m]);
        for (size_t j = ii + 1; j < m; ++j) acc = acc - FieldElement(M[ii][j]) * c[j];
        c[ii] = acc / FieldElement(M[ii][ii]);
    }
    return c;
}

}  // namespace macbinom
