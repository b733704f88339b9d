#include "macbinom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>

#include "macbinom/binom.hpp"
#include "macbinom/diffops.hpp"
#include "macbinom/newton.hpp"
#include "macbinom/sampling.hpp"
#include "macbinom/vars.hpp"

namespace macbinom {

namespace {

std::string pstr(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string clip(const std::string& s) {
    return s.size() <= 200 ? s : s.substr(0, 200) + "...";
}

struct Reporter {
    std::ostream& out;
    VerifyReport rep;

    void result(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            ++rep.passed;
            out << "ok   " << name << "\n";
        } else {
            ++rep.failed;
            std::string line = name;
            line += detail.empty() ? " residual: nonzero" : " " + detail;
            out << "FAIL " << line << "\n";
            rep.failures.push_back(line);
        }
    }

    // Equality case with the residual rendered on failure.
    void equal(const std::string& name, const FieldElement& lhs, const FieldElement& rhs) {
        if (lhs.equals(rhs)) {
            result(name, true);
        } else {
            result(name, false, "residual: " + clip((lhs - rhs).to_string()));
        }
    }
};

int sz_or(const VerifyOptions& o, int d) { return o.max_size < 0 ? d : o.max_size; }
int n_or(const VerifyOptions& o, int d) { return o.n < 0 ? d : o.n; }

FieldElement shifted_var_qt(int i) {
    return FieldElement::var(vars::x(i)) * Ctx::qt_mono(0, -i, false);
}

FieldElement shifted_var_jack(int i) {
    return FieldElement::var(vars::x(i)) -
           FieldElement::var(vars::THETA) * FieldElement::from_int(i);
}

ShiftedSymPoly power_sum(int k, int n, Regime r) {
    FieldElement s;
    for (int i = 1; i <= n; ++i)
        s = s + (r == Regime::qt ? shifted_var_qt(i) : shifted_var_jack(i)).pow(k);
    return ShiftedSymPoly(n, s);
}

ShiftedSymPoly elementary2(int n, Regime r) {
    FieldElement s;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            s = s + (r == Regime::qt ? shifted_var_qt(i) : shifted_var_jack(i)) *
                        (r == Regime::qt ? shifted_var_qt(j) : shifted_var_jack(j));
    return ShiftedSymPoly(n, s);
}

ShiftedSymPoly mono21(Regime r) {
    FieldElement y1 = r == Regime::qt ? shifted_var_qt(1) : shifted_var_jack(1);
    FieldElement y2 = r == Regime::qt ? shifted_var_qt(2) : shifted_var_jack(2);
    return ShiftedSymPoly(2, y1 * y1 * y2 + y1 * y2 * y2);
}

// -------------------------------------------------------------------------
// definition: dual construction, symmetry, degree, vanishing, normalization,
// stability, top layer.

void suite_definition(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 4);
    const int nmax = n_or(opt, 3);
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& mu : enumerate_partitions(msize, n)) {
            const std::string tag = " mu=" + pstr(mu) + " n=" + std::to_string(n);
            const ShiftedSymPoly& p = ctx.pstar(mu, n, false);
            R.equal("dual-construction" + tag, p.f, ctx.pstar_oracle(mu, n).f);
            R.result("shifted-symmetry" + tag, is_shifted_symmetric(p.f, n, Regime::qt));
            R.result("degree" + tag, p.degree() == mu.size());

            bool vanish = true;
            std::string offender;
            for (const Partition& lam : enumerate_partitions(mu.size() + 2, n)) {
                if (lam.contains(mu)) continue;
                if (!ctx.eval_pstar_qlambda(mu, lam, false).is_zero()) {
                    vanish = false;
                    offender = " at lambda=" + pstr(lam);
                    break;
                }
            }
            R.result("extra-vanishing" + tag, vanish,
                     vanish ? "" : "nonzero value" + offender);
            R.equal("normalization" + tag, ctx.eval_pstar_qlambda(mu, mu, false),
                    ctx.h_norm(mu, false));

            if (mu.length() < n && n >= 2) {
                std::vector<FieldElement> xs;
                for (int i = 1; i < n; ++i) xs.push_back(FieldElement::var(vars::x(i)));
                xs.push_back(FieldElement(Poly::one()));
                R.equal("stability" + tag, eval_xs(p.f, xs), ctx.pstar(mu, n - 1, false).f);
            }

            Subst tshift;
            for (int i = 2; i <= n; ++i)
                tshift.emplace(vars::x(i),
                               FieldElement::var(vars::x(i)) * Ctx::qt_mono(0, 1 - i, false));
            R.equal("top-layer" + tag, x_top_layer(p.f),
                    substitute(ctx.macdonald(mu, n, false).f, tshift));
        }
    }
}

// -------------------------------------------------------------------------
// binomial: the main expansion theorem, its rewritten and limit forms, the
// one-variable degenerations.

void suite_binomial(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 4);
    const int nmax = n_or(opt, 3);
    for (int l = 1; l <= msize + 2; ++l) {
        const std::string tag = " l=" + std::to_string(l);
        R.result("one-var-power-expansion" + tag, check_power_expansion(l));
        R.result("one-var-factorial-expansion" + tag, check_factorial_expansion(l));
        R.result("one-var-binomial" + tag, check_one_var_binomial(l));
        R.result("one-var-coefficient" + tag, check_one_var_coefficient(ctx, l));
    }
    for (int n = 1; n <= nmax; ++n) {
        for (const Partition& lam : enumerate_partitions(msize, n)) {
            const std::string tag = " lambda=" + pstr(lam) + " n=" + std::to_string(n);
            R.result("binomial-theorem" + tag, check_binomial_theorem(ctx, lam, n));
            R.result("binomial-rewritten" + tag, check_binomial_alt(ctx, lam, n));
            R.result("constant-reflection" + tag, check_constant_reflection(ctx, lam, n));
            R.result("macdonald-limit" + tag, check_macdonald_limit(ctx, lam, n));
            R.result("zero-limit" + tag, check_zero_limit(ctx, lam, n));
        }
    }
}

// -------------------------------------------------------------------------
// symmetry: the S matrix, its Gauss decomposition, Symmetry II over boxes,
// complement reflection, and Binomial Theorem II.

void suite_symmetry(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 4);
    const int nmax = n_or(opt, 2);
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Partition> parts = enumerate_partitions(msize, n);
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a; b < parts.size(); ++b) {
                const std::string tag = " lambda=" + pstr(parts[a]) + " nu=" +
                                        pstr(parts[b]) + " n=" + std::to_string(n);
                R.result("s-symmetry" + tag, check_s_symmetry_pair(ctx, parts[a], parts[b], n));
                R.result("gauss-decomposition" + tag,
                         check_gauss_pair(ctx, parts[a], parts[b], n));
            }
    }
    const int bmax = std::min(3, msize < 3 ? msize : 3);
    for (int b = 1; b <= bmax; ++b)
        for (int r = 1; r <= 3; ++r) {
            std::vector<int> full(r, b);
            std::vector<Partition> subs = subpartitions(Partition(full));
            for (size_t i = 0; i < subs.size(); ++i) {
                R.result("complement-reflection box=(" + std::to_string(b) + "^" +
                             std::to_string(r) + ") nu=" + pstr(subs[i]),
                         check_complement_reflection(ctx, b, r, subs[i]));
                for (size_t j = i; j < subs.size(); ++j)
                    R.result("symmetry-two box=(" + std::to_string(b) + "^" +
                                 std::to_string(r) + ") lambda=" + pstr(subs[i]) +
                                 " nu=" + pstr(subs[j]),
                             check_symmetry2(ctx, b, r, subs[i], subs[j]));
            }
            if (r <= 2) {
                for (const Partition& lam : subs)
                    for (const Partition& nu : subs)
                        R.result("binomial-theorem-two box=(" + std::to_string(b) + "^" +
                                     std::to_string(r) + ") lambda=" + pstr(lam) +
                                     " nu=" + pstr(nu),
                                 check_bt2(ctx, b, r, lam, nu));
            }
        }
}

// -------------------------------------------------------------------------

void suite_inversion(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 4);
    const int nmax = n_or(opt, 3);
    std::vector<Partition> parts = enumerate_partitions(msize, nmax);
    for (const Partition& lam : parts)
        for (const Partition& nu : parts)
            R.result("inversion lambda=" + pstr(lam) + " nu=" + pstr(nu),
                     check_inversion_pair(ctx, lam, nu));
}

void suite_duality(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 5);
    for (const Partition& lam : enumerate_partitions(msize, std::max(msize, 1)))
        for (const Partition& mu : subpartitions(lam))
            R.result("duality lambda=" + pstr(lam) + " mu=" + pstr(mu),
                     check_duality(ctx, lam, mu));
}

void suite_genfunc(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int K = opt.order < 0 ? 6 : opt.order;
    const int nmax = n_or(opt, 3);
    for (int n = 1; n <= nmax; ++n) {
        R.result("genfunc-one-column n=" + std::to_string(n) + " K=" + std::to_string(K),
                 check_genfunc_ecol(ctx, n, K));
        R.result("genfunc-one-row n=" + std::to_string(n) + " K=" + std::to_string(K),
                 check_genfunc_hrow(ctx, n, K));
    }
}

// -------------------------------------------------------------------------
// eigen: the difference operator D*(u), its D_k coefficients, the vanishing
// lemma, the determinant form, the eigenvalue table, image contracts.

void suite_eigen(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 4);
    const int nmax = n_or(opt, 3);
    Sampler sampler(opt.seed);

    for (int n = 1; n <= std::min(2, nmax); ++n)
        for (const Partition& mu : enumerate_partitions(msize, n)) {
            const std::string tag = " mu=" + pstr(mu) + " n=" + std::to_string(n);
            if (opt.sampled)
                R.result("eigenvalue-sampled" + tag,
                         check_dstar_at(ctx, mu, n, sampler.point(n)));
            else
                R.result("eigenvalue-symbolic" + tag, check_dstar_symbolic(ctx, mu, n));
        }
    if (nmax >= 3) {
        for (const Partition& mu : enumerate_partitions(std::min(msize, 4), 3)) {
            if (mu.size() != std::min(msize, 4)) continue;
            for (int rep = 0; rep < 5; ++rep)
                R.result("eigenvalue-sampled mu=" + pstr(mu) + " n=3 point=" +
                             std::to_string(rep),
                         check_dstar_at(ctx, mu, 3, sampler.point(3)));
        }
    }

    for (int n = 1; n <= nmax; ++n)
        for (const Partition& mu : enumerate_partitions(msize, n)) {
            const std::string tag = " mu=" + pstr(mu) + " n=" + std::to_string(n);
            R.result("dk-eigenvalue-identity" + tag,
                     check_dk_eigenvalue_identity(ctx, mu, n));
            R.result("dk-operator" + tag, check_dk_at(ctx, mu, n, sampler.point(n)));
        }

    {
        bool ok = true;
        std::string offender;
        for (int a = 0; a <= 3 && ok; ++a)
            for (int b = 0; b <= a && ok; ++b)
                for (int c = 0; c <= b && ok; ++c)
                    for (unsigned mask = 0; mask < 8; ++mask)
                        if (!check_lemma({a, b, c}, mask)) {
                            ok = false;
                            offender = " at xi=(" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) +
                                       ") mask=" + std::to_string(mask);
                            break;
                        }
        for (int a = 0; a <= 3 && ok; ++a) {
            for (unsigned mask = 0; mask < 2; ++mask)
                if (!check_lemma({a}, mask)) ok = false;
            for (int b = 0; b <= a && ok; ++b)
                for (unsigned mask = 0; mask < 4; ++mask)
                    if (!check_lemma({a, b}, mask)) ok = false;
        }
        R.result("cross-factor-lemma xi in (3,3,3), n<=3", ok,
                 ok ? "" : "mismatch" + offender);
    }

    {
        std::vector<Partition> index = enumerate_partitions(std::min(msize, 3), 2);
        OpFn op_u = [](const PointFn& f, const std::vector<FieldElement>& xs) {
            return apply_dstar(f, xs, FieldElement::var(vars::U));
        };
        bool ok = true;
        std::string detail;
        try {
            auto table = harish_chandra_table(ctx, op_u, index, 2, sampler);
            for (const auto& [mu, d] : table)
                if (!d.equals(dstar_eigenvalue(mu, 2, FieldElement::var(vars::U)))) {
                    ok = false;
                    detail = "eigenvalue mismatch at mu=" + pstr(mu);
                    break;
                }
        } catch (const contract_error& e) {
            ok = false;
            detail = e.what();
        }
        R.result("eigenvalue-table n=2", ok, detail);

        bool commute = true;
        try {
            OpFn op2 = [](const PointFn& f, const std::vector<FieldElement>& xs) {
                return apply_dstar(f, xs, FieldElement::from_int(2));
            };
            OpFn op3 = [](const PointFn& f, const std::vector<FieldElement>& xs) {
                return apply_dstar(f, xs, FieldElement::from_int(3));
            };
            harish_chandra_table(ctx, op2, index, 2, sampler);
            harish_chandra_table(ctx, op3, index, 2, sampler);
        } catch (const contract_error& e) {
            commute = false;
            detail = e.what();
        }
        R.result("commutativity-witness u=2,3 n=2", commute, commute ? "" : detail);
    }

    {
        const FieldElement x1 = FieldElement::var(vars::x(1));
        const FieldElement x2 = FieldElement::var(vars::x(2));
        const std::vector<std::pair<const char*, FieldElement>> fs = {
            {"1", FieldElement(Poly::one())},
            {"x1+x2", x1 + x2},
            {"x1*x2", x1 * x2},
            {"x1^2+x2^2", x1 * x1 + x2 * x2},
        };
        for (const auto& [name, f] : fs)
            R.result(std::string("determinant-form n=2 f=") + name,
                     check_determinant_form_n2(f));
    }

    for (const Partition& mu : enumerate_partitions(std::min(msize, 3), 2))
        R.result("image-symbolic mu=" + pstr(mu) + " n=2",
                 check_dstar_image_symbolic(ctx, ctx.pstar(mu, 2, false)));
    if (nmax >= 3)
        for (const Partition& mu : {Partition({1}), Partition({2})})
            R.result("image-interpolated mu=" + pstr(mu) + " n=3",
                     check_dstar_image_interpolated(ctx, ctx.pstar(mu, 3, false), 2));
}

// -------------------------------------------------------------------------
// newton: corner-weight identities and the three interpolation algorithms
// on the corpus.

std::vector<std::pair<std::string, ShiftedSymPoly>> qt_corpus(Ctx& ctx) {
    const FieldElement x1 = FieldElement::var(vars::x(1));
    std::vector<std::pair<std::string, ShiftedSymPoly>> c;
    c.emplace_back("one-n1", ShiftedSymPoly(1, FieldElement(Poly::one())));
    c.emplace_back("x1^2-n1", ShiftedSymPoly(1, x1 * x1));
    c.emplace_back("pstar-(1)-n2", ctx.pstar(Partition({1}), 2, false));
    c.emplace_back("pstar-(2)-n2", ctx.pstar(Partition({2}), 2, false));
    c.emplace_back("pstar-(1,1)-n2", ctx.pstar(Partition({1, 1}), 2, false));
    c.emplace_back("pstar-(2,1)-n3", ctx.pstar(Partition({2, 1}), 3, false));
    {
        ShiftedSymPoly e1 = ctx.e_star(1, 2);
        c.emplace_back("estar1-squared-n2", ShiftedSymPoly(2, e1.f * e1.f));
    }
    c.emplace_back("p1-n2", power_sum(1, 2, Regime::qt));
    c.emplace_back("p2-n3", power_sum(2, 3, Regime::qt));
    c.emplace_back("e2-n3", elementary2(3, Regime::qt));
    c.emplace_back("m21-n2", mono21(Regime::qt));
    {
        ShiftedSymPoly p1 = power_sum(1, 2, Regime::qt);
        c.emplace_back("p1-fourth-n2", ShiftedSymPoly(2, p1.f.pow(4)));
    }
    {
        Subst tshift;
        tshift.emplace(vars::x(2), FieldElement::var(vars::x(2)) * Ctx::qt_mono(0, -1, false));
        c.emplace_back("mac-top-layer-(2)-n2",
                       ShiftedSymPoly(2, substitute(ctx.macdonald(Partition({2}), 2, false).f,
                                                    tshift)));
    }
    return c;
}

bool expansions_equal(const Expansion& a, const Expansion& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].first == b[i].first)) return false;
        if (!a[i].second.equals(b[i].second)) return false;
    }
    return true;
}

void suite_newton(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    const int msize = sz_or(opt, 5);
    const int lmax = n_or(opt, 3);
    for (const Partition& lam : enumerate_partitions(msize, lmax)) {
        if (lam.empty()) continue;
        R.result("corner-weight-sum lambda=" + pstr(lam), check_omega_sum(ctx, lam));
        for (const Partition& mu : subpartitions(lam)) {
            if (mu == lam) continue;
            R.result("cover-recurrence lambda=" + pstr(lam) + " mu=" + pstr(mu),
                     check_cover_recurrence(ctx, lam, mu));
        }
    }
    for (const auto& [name, f] : qt_corpus(ctx)) {
        Expansion d = fhat_direct(ctx, f);
        Expansion e = fhat_explicit(ctx, f);
        Expansion r = fhat_recurrence(ctx, f);
        R.result("three-way " + name, expansions_equal(d, e) && expansions_equal(d, r));
        R.equal("reconstruction " + name, reconstruct(ctx, d, f.n), f.f);
    }
}

// -------------------------------------------------------------------------
// jack: corner-weight rows and degenerations, the three Jack algorithms,
// one-variable forward differences, the trinomial dimension identity.

std::vector<std::pair<std::string, ShiftedSymPoly>> jack_corpus() {
    const FieldElement x1 = FieldElement::var(vars::x(1));
    std::vector<std::pair<std::string, ShiftedSymPoly>> c;
    c.emplace_back("one-n1", ShiftedSymPoly(1, FieldElement(Poly::one())));
    c.emplace_back("x1^2-n1", ShiftedSymPoly(1, x1 * x1));
    c.emplace_back("x1^3-n1", ShiftedSymPoly(1, x1 * x1 * x1));
    c.emplace_back("p1-n2", power_sum(1, 2, Regime::jack));
    c.emplace_back("p2-n2", power_sum(2, 2, Regime::jack));
    c.emplace_back("p2-n3", power_sum(2, 3, Regime::jack));
    c.emplace_back("e2-n3", elementary2(3, Regime::jack));
    c.emplace_back("m21-n2", mono21(Regime::jack));
    {
        ShiftedSymPoly p1 = power_sum(1, 2, Regime::jack);
        c.emplace_back("p1-fourth-n2", ShiftedSymPoly(2, p1.f.pow(4)));
    }
    c.emplace_back("basis-(2,1)-n2", ShiftedSymPoly(2, jack_basis_poly(Partition({2, 1}), 2)));
    return c;
}

void suite_jack(Ctx& ctx, const VerifyOptions& opt, Reporter& R) {
    for (int l = 1; l <= 6; ++l) {
        Partition lam({l});
        Partition nu = l > 1 ? Partition({l - 1}) : Partition();
        R.equal("row-corner-weight l=" + std::to_string(l), omega_theta(nu, lam),
                FieldElement::from_int(l));
    }
    for (const Partition& lam : enumerate_partitions(4, 3)) {
        if (lam.empty()) continue;
        bool ok = true;
        for (int r : lam.removable_rows())
            if (!check_omega_degeneration(lam.remove_box(r), lam)) ok = false;
        R.result("corner-weight-degeneration lambda=" + pstr(lam), ok);
    }
    for (const auto& [name, f] : jack_corpus()) {
        Expansion s = jack_fhat_solver(f);
        Expansion e = jack_fhat_explicit(f);
        Expansion q = jack_fhat_fast(f);
        R.result("jack-three-way " + name, expansions_equal(s, e) && expansions_equal(s, q));
        R.equal("jack-reconstruction " + name, jack_reconstruct(q, f.n), f.f);
    }
    {
        const FieldElement x1 = FieldElement::var(vars::x(1));
        const FieldElement th = FieldElement::var(vars::THETA);
        const std::vector<std::pair<const char*, FieldElement>> fs = {
            {"x1^2", x1 * x1},
            {"x1^3", x1 * x1 * x1},
            {"x1^4", x1.pow(4)},
            {"(x1-theta)^2", (x1 - th) * (x1 - th)},
            {"x1^2+3x1", x1 * x1 + FieldElement::from_int(3) * x1},
        };
        for (const auto& [name, f] : fs)
            R.result(std::string("forward-differences f=") + name,
                     check_jack_one_var(ShiftedSymPoly(1, f)));
    }
    for (int b = 1; b <= 3; ++b)
        for (int r = 1; r <= 2; ++r) {
            std::vector<int> full(r, b);
            std::vector<Partition> subs = subpartitions(Partition(full));
            for (const Partition& nu : subs)
                for (const Partition& lam : subs)
                    R.result("trinomial-dimension box=(" + std::to_string(b) + "^" +
                                 std::to_string(r) + ") lambda=" + pstr(lam) +
                                 " nu=" + pstr(nu),
                             check_jack_trinomial_dimension(b, r, lam, nu));
        }
}

using SuiteFn = void (*)(Ctx&, const VerifyOptions&, Reporter&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"definition", suite_definition}, {"binomial", suite_binomial},
        {"symmetry", suite_symmetry},     {"inversion", suite_inversion},
        {"duality", suite_duality},       {"genfunc", suite_genfunc},
        {"eigen", suite_eigen},           {"newton", suite_newton},
        {"jack", suite_jack},
    };
    return table;
}

void run_one(Ctx& ctx, const std::string& name, SuiteFn fn, const VerifyOptions& opt,
             Reporter& R) {
    R.out << "# suite " << name << " mode=" << (opt.sampled ? "sampled" : "symbolic")
          << " seed=" << opt.seed << "\n";
    const int before_pass = R.rep.passed;
    const int before_fail = R.rep.failed;
    auto t0 = std::chrono::steady_clock::now();
    fn(ctx, opt, R);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "[suite " << name << ": " << secs << "s]\n";
    R.out << "# suite " << name << ": passed " << R.rep.passed - before_pass << " failed "
          << R.rep.failed - before_fail << "\n";
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

VerifyReport run_suite(Ctx& ctx, const std::string& suite, const VerifyOptions& opt,
                       std::ostream& out) {
    Reporter R{out, {}};
    bool found = false;
    for (const auto& [name, fn] : suite_table()) {
        if (suite == "all" || suite == name) {
            run_one(ctx, name, fn, opt, R);
            found = true;
        }
    }
    if (!found) throw contract_error("unknown suite: " + suite);
    out << "# total: passed " << R.rep.passed << " failed " << R.rep.failed << "\n";
    return R.rep;
}

}  // namespace macbinom
