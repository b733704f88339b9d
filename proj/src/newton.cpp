#include "macbinom/newton.hpp"

#include "macbinom/linsolve.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace macbinom {

namespace {

// Row of the box added to nu to obtain lambda; throws when lambda is not
// nu plus exactly one box.
int added_row(const Partition& nu, const Partition& lambda) {
    if (lambda.size() != nu.size() + 1 || !lambda.contains(nu))
        throw contract_error("cover_factors: second argument does not cover the first");
    int l = lambda.length();
    for (int i = 1; i <= l; ++i)
        if (lambda.part(i) != nu.part(i)) return i;
    throw contract_error("cover_factors: second argument does not cover the first");
}

// 1 - q^dy t^dx.
Poly qt_factor(int dy, int dx) {
    Monomial m;
    m.set(vars::Q, dy);
    m.set(vars::T, dx);
    return Poly::one() - Poly::term(Rat(1), m);
}

// dy + theta dx.
Poly theta_factor(int dy, int dx) {
    return Poly::constant(Rat(dy)) + Poly::term(Rat(dx), Monomial::var(vars::THETA));
}

}  // namespace

std::vector<Partition> covers_below(const Partition& lambda) {
    std::vector<Partition> out;
    for (int r : lambda.removable_rows()) out.push_back(lambda.remove_box(r));
    return out;
}

CoverFactors cover_factors(const Partition& nu, const Partition& lambda) {
    int star_row = added_row(nu, lambda);
    CornerPoints cp = corner_points(nu, star_row);
    CoverFactors cf;
    for (const auto& [cx, cy] : cp.inner)
        cf.num.emplace_back(cp.star.second - cy, cx - cp.star.first);
    for (const auto& [cx, cy] : cp.outer)
        cf.den.emplace_back(cp.star.second - cy, cx - cp.star.first);
    return cf;
}

FieldElement omega_qt(const Partition& nu, const Partition& lambda) {
    CoverFactors cf = cover_factors(nu, lambda);
    Poly num = Poly::one(), den = Poly::one();
    for (const auto& [dy, dx] : cf.num) num = num * qt_factor(dy, dx);
    for (const auto& [dy, dx] : cf.den) den = den * qt_factor(dy, dx);
    return FieldElement(std::move(num)) / FieldElement(std::move(den));
}

FieldElement omega_theta(const Partition& nu, const Partition& lambda) {
    CoverFactors cf = cover_factors(nu, lambda);
    Poly num = Poly::one(), den = Poly::one();
    for (const auto& [dy, dx] : cf.num) num = num * theta_factor(dy, dx);
    for (const auto& [dy, dx] : cf.den) den = den * theta_factor(dy, dx);
    return FieldElement(std::move(num)) / FieldElement(std::move(den));
}

FieldElement binom_single_box(const Partition& lambda) {
    Poly num;
    for (int i = 1; i <= lambda.length(); ++i) {
        Monomial hi;
        hi.set(vars::Q, lambda.part(i));
        hi.set(vars::T, 1 - i);
        num += Poly::term(Rat(1), hi) - Poly::term(Rat(1), Monomial::var(vars::T, 1 - i));
    }
    return FieldElement(std::move(num), Poly::var(vars::Q) - Poly::one());
}

bool check_omega_sum(Ctx& ctx, const Partition& lambda) {
    FieldElement sum;
    for (const Partition& nu : covers_below(lambda)) sum += omega_qt(nu, lambda);
    const FieldElement closed = binom_single_box(lambda);
    const FieldElement knot = ctx.binom(lambda, Partition({1}));
    return sum.equals(closed) && sum.equals(knot);
}

bool check_cover_recurrence(Ctx& ctx, const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu) || lambda == mu)
        throw contract_error("cover recurrence needs mu strictly inside lambda");
    FieldElement lhs;
    for (const Partition& nu : covers_below(lambda))
        lhs += omega_qt(nu, lambda) * ctx.binom(nu, mu, true);
    FieldElement rhs =
        (binom_single_box(lambda) - binom_single_box(mu)) * ctx.binom(lambda, mu, true);
    return lhs.equals(rhs);
}

bool check_omega_degeneration(const Partition& nu, const Partition& lambda) {
    CoverFactors cf = cover_factors(nu, lambda);
    std::vector<std::pair<int, int>> all = cf.num;
    all.insert(all.end(), cf.den.begin(), cf.den.end());
    const FieldElement one_minus_q(Poly::one() - Poly::var(vars::Q));
    for (const auto& [dy, dx] : all) {
        for (int s = 0; s <= 3; ++s) {
            Subst to_qs{{vars::T, FieldElement::var(vars::Q, s)}};
            FieldElement g = substitute(qt_factor(dy, dx), to_qs) / one_minus_q;
            FieldElement at1 = substitute(g, Subst{{vars::Q, FieldElement::from_int(1)}});
            FieldElement want = substitute(theta_factor(dy, dx),
                                           Subst{{vars::THETA, FieldElement::from_int(s)}});
            if (!at1.equals(want)) return false;
        }
    }
    return true;
}

// ---- (q,t) expansions -------------------------------------------------------

namespace {

void require_symmetric(const ShiftedSymPoly& f, Regime r) {
    if (!is_shifted_symmetric(f.f, f.n, r))
        throw contract_error("interpolation input is not shifted symmetric");
}

// Values at the knots of every partition in the downset, keyed by partition.
std::map<Partition, FieldElement> knot_values(const KnotFn& f,
                                              const std::vector<Partition>& downset) {
    std::map<Partition, FieldElement> out;
    for (const Partition& mu : downset) out.emplace(mu, f(mu));
    return out;
}

KnotFn qt_knot_fn(const ShiftedSymPoly& f) {
    return [&f](const Partition& mu) { return eval_xs(f.f, knot_qpow(mu, f.n)); };
}

Expansion fhat_direct_core(Ctx& ctx, const std::map<Partition, FieldElement>& fq,
                           const std::vector<Partition>& downset) {
    Expansion out;
    for (const Partition& lambda : downset) {
        std::vector<std::pair<Poly, Poly>> parts;
        const FieldElement& fl = fq.at(lambda);
        parts.emplace_back(fl.num(), fl.den());
        for (const auto& [mu, c] : out) {
            if (!lambda.contains(mu)) continue;
            FieldElement term = c * ctx.eval_pstar_qlambda(mu, lambda);
            parts.emplace_back(-term.num(), term.den());
        }
        out.emplace_back(lambda, fraction_sum(std::move(parts)) / ctx.h_norm(lambda));
    }
    return out;
}

Expansion fhat_explicit_core(Ctx& ctx, const std::map<Partition, FieldElement>& fq,
                             const std::vector<Partition>& downset) {
    Expansion out;
    for (const Partition& lambda : downset) {
        const long nl = lambda.n_stat();
        const long nlc = lambda.conjugate().n_stat();
        std::vector<std::pair<Poly, Poly>> parts;
        for (const Partition& nu : downset) {
            if (nu.size() > lambda.size()) break;
            if (!lambda.contains(nu)) continue;
            FieldElement term = ctx.binom(lambda, nu, true) * fq.at(nu);
            term *= Ctx::qt_mono(nlc - nu.conjugate().n_stat(), -(nl - nu.n_stat()), false);
            bool negate = (lambda.size() - nu.size()) % 2 != 0;
            parts.emplace_back(negate ? -term.num() : term.num(), term.den());
        }
        out.emplace_back(lambda, fraction_sum(std::move(parts)) / ctx.h_norm(lambda));
    }
    return out;
}

Expansion fhat_recurrence_core(Ctx& ctx, const std::map<Partition, FieldElement>& fq,
                               const std::vector<Partition>& downset) {

    std::map<Partition, FieldElement> single_box;
    for (const Partition& p : downset) single_box.emplace(p, binom_single_box(p));

    // Covers of lambda with the weight and the colengths of the added box.
    struct Cover {
        Partition nu;
        FieldElement weight;
        FieldElement coleg_mono;
    };
    std::map<Partition, std::vector<Cover>> covers;
    for (const Partition& lambda : downset) {
        std::vector<Cover> cs;
        for (int r : lambda.removable_rows()) {
            Partition nu = lambda.remove_box(r);
            cs.push_back({nu, omega_qt(nu, lambda),
                          Ctx::qt_mono(lambda.part(r) - 1, -(r - 1), false)});
        }
        covers.emplace(lambda, std::move(cs));
    }

    std::map<std::pair<Partition, Partition>, FieldElement> F;
    Expansion out;
    for (const Partition& lambda : downset) {
        std::vector<std::pair<Poly, Poly>> sum_parts;
        for (const Partition& mu : downset) {
            if (mu.size() > lambda.size()) break;
            if (!lambda.contains(mu)) continue;
            FieldElement val;
            if (mu == lambda) {
                val = fq.at(mu);
            } else {
                std::vector<std::pair<Poly, Poly>> parts;
                for (const Cover& c : covers.at(lambda)) {
                    if (!c.nu.contains(mu)) continue;
                    FieldElement term =
                        c.coleg_mono * c.weight * F.at({mu, c.nu});
                    parts.emplace_back(-term.num(), term.den());
                }
                val = fraction_sum(std::move(parts)) /
                      (single_box.at(lambda) - single_box.at(mu));
            }
            sum_parts.emplace_back(val.num(), val.den());
            F.emplace(std::make_pair(mu, lambda), std::move(val));
        }
        out.emplace_back(lambda, fraction_sum(std::move(sum_parts)) / ctx.h_norm(lambda));
    }
    return out;
}

}  // namespace

Expansion fhat_direct(Ctx& ctx, const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::qt);
    const auto downset = enumerate_partitions(f.degree(), f.n);
    return fhat_direct_core(ctx, knot_values(qt_knot_fn(f), downset), downset);
}

Expansion fhat_explicit(Ctx& ctx, const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::qt);
    const auto downset = enumerate_partitions(f.degree(), f.n);
    return fhat_explicit_core(ctx, knot_values(qt_knot_fn(f), downset), downset);
}

Expansion fhat_recurrence(Ctx& ctx, const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::qt);
    const auto downset = enumerate_partitions(f.degree(), f.n);
    return fhat_recurrence_core(ctx, knot_values(qt_knot_fn(f), downset), downset);
}

Expansion fhat_direct(Ctx& ctx, const KnotFn& f, int deg, int n) {
    const auto downset = enumerate_partitions(deg, n);
    return fhat_direct_core(ctx, knot_values(f, downset), downset);
}

Expansion fhat_explicit(Ctx& ctx, const KnotFn& f, int deg, int n) {
    const auto downset = enumerate_partitions(deg, n);
    return fhat_explicit_core(ctx, knot_values(f, downset), downset);
}

Expansion fhat_recurrence(Ctx& ctx, const KnotFn& f, int deg, int n) {
    const auto downset = enumerate_partitions(deg, n);
    return fhat_recurrence_core(ctx, knot_values(f, downset), downset);
}

FieldElement reconstruct(Ctx& ctx, const Expansion& e, int n) {
    std::vector<std::pair<Poly, Poly>> parts;
    for (const auto& [mu, c] : e) {
        if (c.is_zero()) continue;
        const ShiftedSymPoly& p = ctx.pstar(mu, n);
        parts.emplace_back(c.num() * p.f.num(), c.den() * p.f.den());
    }
    return fraction_sum(std::move(parts));
}

// ---- theta regime -----------------------------------------------------------

namespace {

// Shifted values y_i = kappa_i - theta i at an integer knot.
std::vector<FieldElement> theta_knot(const Partition& kappa, int n) {
    std::vector<FieldElement> ys;
    ys.reserve(n);
    for (int i = 1; i <= n; ++i)
        ys.push_back(FieldElement(Poly::constant(Rat(kappa.part(i))) -
                                  Poly::term(Rat(i), Monomial::var(vars::THETA))));
    return ys;
}

// Shifted values with symbolic x.
std::vector<FieldElement> theta_symbolic(int n) {
    std::vector<FieldElement> ys;
    ys.reserve(n);
    for (int i = 1; i <= n; ++i)
        ys.push_back(FieldElement(Poly::var(vars::x(i)) -
                                  Poly::term(Rat(i), Monomial::var(vars::THETA))));
    return ys;
}

// Interpolation basis polynomials B_mu over m_rho(y), solved once per mu and
// evaluated at integer knots on demand.  All partitions are capped at n parts.
class ThetaBasis {
  public:
    explicit ThetaBasis(int n) : n_(n) {}

    // B_mu(lambda) = [lambda; mu]_theta.
    const FieldElement& value(const Partition& lambda, const Partition& mu) {
        auto key = std::make_pair(lambda, mu);
        auto it = bval_.find(key);
        if (it != bval_.end()) return it->second;
        const Solved& s = solve(mu);
        std::vector<std::pair<Poly, Poly>> parts;
        for (size_t c = 0; c < s.basis.size(); ++c) {
            if (s.coeff[c].is_zero()) continue;
            FieldElement term = s.coeff[c] * msym(s.basis[c], lambda);
            parts.emplace_back(term.num(), term.den());
        }
        return bval_.emplace(std::move(key), fraction_sum(std::move(parts)))
            .first->second;
    }

    // B_mu with symbolic x1..xn.
    FieldElement symbolic(const Partition& mu) {
        const Solved& s = solve(mu);
        const std::vector<FieldElement> ys = theta_symbolic(n_);
        std::vector<std::pair<Poly, Poly>> parts;
        for (size_t c = 0; c < s.basis.size(); ++c) {
            if (s.coeff[c].is_zero()) continue;
            FieldElement term = s.coeff[c] * monomial_sym_eval(s.basis[c], ys);
            parts.emplace_back(term.num(), term.den());
        }
        return fraction_sum(std::move(parts));
    }

  private:
    struct Solved {
        std::vector<Partition> basis;
        std::vector<FieldElement> coeff;
    };

    const FieldElement& msym(const Partition& rho, const Partition& kappa) {
        auto key = std::make_pair(rho, kappa);
        auto it = msym_.find(key);
        if (it != msym_.end()) return it->second;
        return msym_.emplace(std::move(key),
                             monomial_sym_eval(rho, theta_knot(kappa, n_)))
            .first->second;
    }

    const Solved& solve(const Partition& mu) {
        auto it = solved_.find(mu);
        if (it != solved_.end()) return it->second;
        Solved s;
        s.basis = enumerate_partitions(mu.size(), n_);
        const size_t m = s.basis.size();
        std::vector<std::vector<FieldElement>> A(m, std::vector<FieldElement>(m));
        std::vector<FieldElement> b(m);
        for (size_t r = 0; r < m; ++r) {
            for (size_t c = 0; c < m; ++c) A[r][c] = msym(s.basis[c], s.basis[r]);
            if (s.basis[r] == mu) b[r] = FieldElement(Poly::one());
        }
        s.coeff = solve_square(std::move(A), std::move(b));
        return solved_.emplace(mu, std::move(s)).first->second;
    }

    int n_;
    std::map<Partition, Solved> solved_;
    std::map<std::pair<Partition, Partition>, FieldElement> msym_;
    std::map<std::pair<Partition, Partition>, FieldElement> bval_;
};

std::map<Partition, FieldElement> knot_values_theta(const ShiftedSymPoly& f,
                                                    const std::vector<Partition>& downset) {
    std::map<Partition, FieldElement> out;
    for (const Partition& mu : downset) out.emplace(mu, eval_xs(f.f, knot_integers(mu, f.n)));
    return out;
}

}  // namespace

FieldElement jack_binom(const Partition& lambda, const Partition& mu) {
    int n = std::max({lambda.length(), mu.length(), 1});
    ThetaBasis basis(n);
    return basis.value(lambda, mu);
}

FieldElement jack_basis_poly(const Partition& mu, int n) {
    if (mu.length() > n) throw contract_error("basis polynomial needs length(mu) <= n");
    ThetaBasis basis(n);
    return basis.symbolic(mu);
}

Expansion jack_fhat_solver(const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::jack);
    const std::vector<Partition> downset = enumerate_partitions(f.degree(), f.n);
    const auto fv = knot_values_theta(f, downset);
    ThetaBasis basis(f.n);
    Expansion out;
    for (const Partition& lambda : downset) {
        std::vector<std::pair<Poly, Poly>> parts;
        const FieldElement& fl = fv.at(lambda);
        parts.emplace_back(fl.num(), fl.den());
        for (const auto& [mu, c] : out) {
            if (!lambda.contains(mu)) continue;
            FieldElement term = c * basis.value(lambda, mu);
            parts.emplace_back(-term.num(), term.den());
        }
        out.emplace_back(lambda, fraction_sum(std::move(parts)));
    }
    return out;
}

Expansion jack_fhat_explicit(const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::jack);
    const std::vector<Partition> downset = enumerate_partitions(f.degree(), f.n);
    const auto fv = knot_values_theta(f, downset);
    ThetaBasis basis(f.n);
    Expansion out;
    for (const Partition& lambda : downset) {
        std::vector<std::pair<Poly, Poly>> parts;
        for (const Partition& mu : downset) {
            if (mu.size() > lambda.size()) break;
            if (!lambda.contains(mu)) continue;
            FieldElement term = basis.value(lambda, mu) * fv.at(mu);
            bool negate = (lambda.size() - mu.size()) % 2 != 0;
            parts.emplace_back(negate ? -term.num() : term.num(), term.den());
        }
        out.emplace_back(lambda, fraction_sum(std::move(parts)));
    }
    return out;
}

Expansion jack_fhat_fast(const ShiftedSymPoly& f) {
    require_symmetric(f, Regime::jack);
    const int deg = f.degree();
    const std::vector<Partition> downset = enumerate_partitions(deg, f.n);
    std::map<Partition, FieldElement> cur = knot_values_theta(f, downset);

    std::map<Partition, std::vector<std::pair<Partition, FieldElement>>> covers;
    for (const Partition& lambda : downset) {
        std::vector<std::pair<Partition, FieldElement>> cs;
        for (const Partition& nu : covers_below(lambda))
            cs.emplace_back(nu, omega_theta(nu, lambda));
        covers.emplace(lambda, std::move(cs));
    }

    std::map<Partition, FieldElement> coeff;
    coeff.emplace(Partition(), cur.at(Partition()));
    for (int k = 0; k < deg; ++k) {
        std::map<Partition, FieldElement> next = cur;
        for (const Partition& lambda : downset) {
            if (lambda.size() < k + 1) continue;
            FieldElement drop;
            for (const auto& [nu, w] : covers.at(lambda)) drop += w * cur.at(nu);
            next[lambda] =
                cur.at(lambda) - drop * FieldElement::from_rat(Rat(1) / Rat(lambda.size()));
        }
        cur = std::move(next);
        for (const Partition& lambda : downset)
            if (lambda.size() == k + 1) coeff.emplace(lambda, cur.at(lambda));
    }

    Expansion out;
    for (const Partition& lambda : downset) out.emplace_back(lambda, coeff.at(lambda));
    return out;
}

FieldElement jack_reconstruct(const Expansion& e, int n) {
    ThetaBasis basis(n);
    std::vector<std::pair<Poly, Poly>> parts;
    for (const auto& [mu, c] : e) {
        if (c.is_zero()) continue;
        FieldElement term = c * basis.symbolic(mu);
        parts.emplace_back(term.num(), term.den());
    }
    return fraction_sum(std::move(parts));
}

bool check_jack_one_var(const ShiftedSymPoly& f) {
    if (f.n != 1) throw contract_error("one-variable check needs n = 1");
    const Expansion fast = jack_fhat_fast(f);
    const int deg = f.degree();
    std::vector<FieldElement> at_int;
    for (int j = 0; j <= deg; ++j)
        at_int.push_back(eval_xs(f.f, {FieldElement::from_int(j)}));
    for (const auto& [lambda, c] : fast) {
        const int m = lambda.size();
        FieldElement diff;
        for (int j = 0; j <= m; ++j) {
            Rat binom = Rat(multinomial3(m, j, m - j));
            FieldElement term = at_int[j] * FieldElement::from_rat(binom);
            diff += ((m - j) % 2 != 0) ? -term : term;
        }
        if (!c.equals(diff)) return false;
    }
    return true;
}

bool check_jack_trinomial_dimension(int b, int n, const Partition& lambda,
                                    const Partition& nu) {
    const Partition beta(std::vector<int>(n, b));
    if (!beta.contains(lambda) || !beta.contains(nu))
        throw contract_error("trinomial arguments escape the box");
    const Partition rest = complement(b, n, nu);
    FieldElement tri = jack_binom(beta, nu) * jack_binom(rest, lambda);
    FieldElement at_one =
        substitute(tri, Subst{{vars::THETA, FieldElement::from_int(1)}});
    Int num = multinomial3(beta.size(), lambda.size(), nu.size()) *
              dim_standard(lambda) * dim_standard(nu) * dim_standard(rest, lambda);
    Rat want = Rat(num) / Rat(dim_standard(beta));
    return at_one.equals(FieldElement::from_rat(want));
}

}  // namespace macbinom
