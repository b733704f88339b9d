#include "macbinom/mac.hpp"

#include "macbinom/json_io.hpp"
#include "macbinom/linsolve.hpp"
#include "macbinom/vars.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace macbinom {

namespace {

FieldElement b_factor(const Partition& nu, Box s, bool inv) {
    HookData h = hook_data(nu, s);
    FieldElement one = FieldElement::from_int(1);
    return (one - Ctx::qt_mono(h.arm, h.leg + 1, inv)) /
           (one - Ctx::qt_mono(h.arm + 1, h.leg, inv));
}

std::string cache_name(const std::tuple<Partition, int, bool>& key) {
    const auto& [mu, n, inv] = key;
    std::string parts = mu.empty() ? "0" : mu.to_string();
    for (auto& c : parts)
        if (c == ',') c = '-';
    std::ostringstream os;
    os << "pstar_" << (inv ? "inv" : "qt") << "_" << parts << "_n" << n << ".json";
    return os.str();
}

}  // namespace

FieldElement Ctx::qt_mono(long qe, long te, bool inv) {
    if (inv) {
        qe = -qe;
        te = -te;
    }
    Monomial m;
    m.set(vars::Q, static_cast<int>(qe));
    m.set(vars::T, static_cast<int>(te));
    return FieldElement(Poly::term(Rat(1), m));
}

FieldElement psi_weight(const ReverseTableau& T, int n, bool inv) {
    auto chain = T.chain(n);  // S_1 .. S_{n+1}
    FieldElement psi = FieldElement::from_int(1);
    for (int r = 0; r < n; ++r) {
        const Partition& lam = chain[static_cast<size_t>(r)];
        const Partition& mu = chain[static_cast<size_t>(r) + 1];
        if (lam == mu) continue;
        std::set<int> rows, cols;
        for (int i = 1; i <= lam.length(); ++i) {
            if (lam.part(i) > mu.part(i)) {
                rows.insert(i);
                for (int j = mu.part(i) + 1; j <= lam.part(i); ++j) cols.insert(j);
            }
        }
        for (const Box& s : boxes_of(mu)) {
            if (rows.count(s.row) && !cols.count(s.col))
                psi = psi * b_factor(mu, s, inv) / b_factor(lam, s, inv);
        }
    }
    return psi;
}

Ctx::Ctx() {
    if (const char* d = std::getenv("MACBINOM_CACHE_DIR"); d && *d) disk_dir_ = d;
}

const std::vector<TableauTerm>& Ctx::tableau_terms(const Partition& mu, int n, bool inv) {
    PKey key{mu, n, inv};
    auto it = tab_cache_.find(key);
    if (it != tab_cache_.end()) return it->second;
    std::vector<TableauTerm> terms;
    for (const ReverseTableau& T : enumerate_reverse_tableaux(mu, n)) {
        TableauTerm tt;
        tt.psi = psi_weight(T, n, inv);
        for (const Box& s : boxes_of(mu))
            tt.boxes.push_back({T.entry(s.row, s.col), s.col - 1, s.row - 1});
        terms.push_back(std::move(tt));
    }
    return tab_cache_.emplace(std::move(key), std::move(terms)).first->second;
}

const ShiftedSymPoly& Ctx::pstar(const Partition& mu, int n, bool inv) {
    if (mu.length() > n) throw contract_error("partition has more parts than variables");
    PKey key{mu, n, inv};
    auto it = pstar_cache_.find(key);
    if (it != pstar_cache_.end()) return it->second;
    ShiftedSymPoly result;
    if (!disk_load(key, result)) {
        std::vector<std::pair<Poly, Poly>> parts;
        for (const TableauTerm& tt : tableau_terms(mu, n, inv)) {
            Poly prod = Poly::one();
            for (const auto& [e, ap, lp] : tt.boxes) {
                // t^{1-e} x_e - q^{a'} t^{1-e-l'}  (exponents negated when inv)
                Monomial mx, mc;
                mx.set(vars::x(e), 1);
                mx.set(vars::T, inv ? e - 1 : 1 - e);
                mc.set(vars::Q, inv ? -ap : ap);
                mc.set(vars::T, inv ? e - 1 + lp : 1 - e - lp);
                Poly factor = Poly::term(Rat(1), mx) + Poly::term(Rat(-1), mc);
                prod = prod * factor;
            }
            parts.emplace_back(prod * tt.psi.num(), tt.psi.den());
        }
        result = ShiftedSymPoly(n, fraction_sum(std::move(parts)));
        disk_store(key, result);
    }
    return pstar_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const ShiftedSymPoly& Ctx::macdonald(const Partition& mu, int n, bool inv) {
    PKey key{mu, n, inv};
    auto it = mac_cache_.find(key);
    if (it != mac_cache_.end()) return it->second;
    std::vector<std::pair<Poly, Poly>> parts;
    if (mu.length() <= n) {
        for (const TableauTerm& tt : tableau_terms(mu, n, inv)) {
            Monomial m;
            for (const auto& [e, ap, lp] : tt.boxes) m.set(vars::x(e), m.exp(vars::x(e)) + 1);
            parts.emplace_back(tt.psi.num().mul_mono(m), tt.psi.den());
        }
    }
    return mac_cache_
        .emplace(std::move(key), ShiftedSymPoly(n, fraction_sum(std::move(parts))))
        .first->second;
}

ShiftedSymPoly Ctx::pstar_oracle(const Partition& mu, int n) {
    if (mu.length() > n) throw contract_error("partition has more parts than variables");
    std::vector<Partition> idx = enumerate_partitions(mu.size(), n);
    const size_t m = idx.size();
    std::vector<std::vector<FieldElement>> A(m, std::vector<FieldElement>(m));
    std::vector<FieldElement> rhs(m);
    for (size_t r = 0; r < m; ++r) {
        // Knot q^lambda in the shifted coordinates x_i t^{-i}.
        std::vector<FieldElement> vals;
        for (int i = 1; i <= n; ++i) vals.push_back(qt_mono(idx[r].part(i), -i, false));
        for (size_t c = 0; c < m; ++c) A[r][c] = monomial_sym_eval(idx[c], vals);
        rhs[r] = (idx[r] == mu) ? h_norm(mu) : FieldElement();
    }
    std::vector<FieldElement> coef = solve_square(std::move(A), std::move(rhs));
    FieldElement sum;
    for (size_t c = 0; c < m; ++c) {
        if (coef[c].is_zero()) continue;
        std::vector<FieldElement> xt;
        for (int i = 1; i <= n; ++i)
            xt.push_back(FieldElement::var(vars::x(i)) * qt_mono(0, -i, false));
        sum = sum + coef[c] * monomial_sym_eval(idx[c], xt);
    }
    return ShiftedSymPoly(n, sum);
}

ShiftedSymPoly Ctx::e_star(int k, int n) {
    if (k > n) return ShiftedSymPoly(n, FieldElement());
    std::vector<int> col(static_cast<size_t>(k), 1);
    return pstar(Partition(std::move(col)), n);
}

ShiftedSymPoly Ctx::h_star(int k, int n, bool inv) {
    if (k == 0) return ShiftedSymPoly(n, FieldElement::from_int(1));
    return pstar(Partition(std::vector<int>{k}), n, inv);
}

FieldElement Ctx::h_norm(const Partition& mu, bool inv) {
    FieldElement out = qt_mono(mu.conjugate().n_stat(), -2 * mu.n_stat(), inv);
    for (const Box& s : boxes_of(mu)) {
        HookData h = hook_data(mu, s);
        out = out * (qt_mono(h.arm + 1, h.leg, inv) - FieldElement::from_int(1));
    }
    return out;
}

FieldElement Ctx::principal_special(const Partition& mu, int n, bool inv) {
    if (mu.length() > n) return FieldElement();
    FieldElement out =
        qt_mono(0, mu.n_stat() + static_cast<long>(mu.size()) * (1 - n), inv);
    FieldElement one = FieldElement::from_int(1);
    for (const Box& s : boxes_of(mu)) {
        HookData h = hook_data(mu, s);
        out = out * (one - qt_mono(h.coarm, n - h.coleg, inv)) /
              (one - qt_mono(h.arm, 1 + h.leg, inv));
    }
    return out;
}

FieldElement Ctx::pstar_at_constant(const Partition& mu, int n, const FieldElement& a,
                                    bool inv) {
    FieldElement out = principal_special(mu, n, inv);
    for (const Box& s : boxes_of(mu)) {
        HookData h = hook_data(mu, s);
        out = out * (a - qt_mono(h.coarm, -h.coleg, inv));
    }
    return out;
}

FieldElement Ctx::eval_pstar(const Partition& mu, const std::vector<FieldElement>& xs,
                             bool inv) {
    const int n = static_cast<int>(xs.size());
    if (mu.length() > n) return FieldElement();
    std::vector<std::pair<Poly, Poly>> parts;
    for (const TableauTerm& tt : tableau_terms(mu, n, inv)) {
        FieldElement prod = tt.psi;
        for (const auto& [e, ap, lp] : tt.boxes)
            prod = prod * (xs[static_cast<size_t>(e) - 1] * qt_mono(0, 1 - e, inv) -
                           qt_mono(ap, 1 - e - lp, inv));
        parts.emplace_back(prod.num(), prod.den());
    }
    return fraction_sum(std::move(parts));
}

FieldElement Ctx::eval_macdonald(const Partition& mu, const std::vector<FieldElement>& xs,
                                 bool inv) {
    const int n = static_cast<int>(xs.size());
    if (mu.length() > n) return FieldElement();
    std::vector<std::pair<Poly, Poly>> parts;
    for (const TableauTerm& tt : tableau_terms(mu, n, inv)) {
        FieldElement prod = tt.psi;
        for (const auto& [e, ap, lp] : tt.boxes) prod = prod * xs[static_cast<size_t>(e) - 1];
        parts.emplace_back(prod.num(), prod.den());
    }
    return fraction_sum(std::move(parts));
}

FieldElement Ctx::eval_pstar_qlambda(const Partition& mu, const Partition& lambda, bool inv) {
    EKey key{mu, lambda, inv};
    auto it = qeval_cache_.find(key);
    if (it != qeval_cache_.end()) return it->second;
    int n = std::max({mu.length(), lambda.length(), 1});
    auto xs = inv ? knot_qpow_inv(lambda, n) : knot_qpow(lambda, n);
    FieldElement val = eval_pstar(mu, xs, inv);
    qeval_cache_.emplace(std::move(key), val);
    return val;
}

FieldElement Ctx::binom(const Partition& lambda, const Partition& mu, bool inv) {
    EKey key{lambda, mu, inv};
    auto it = binom_cache_.find(key);
    if (it != binom_cache_.end()) return it->second;
    FieldElement val =
        eval_pstar_qlambda(mu, lambda, inv) / eval_pstar_qlambda(mu, mu, inv);
    binom_cache_.emplace(std::move(key), val);
    return val;
}

FieldElement Ctx::e_star_eval(int k, const std::vector<FieldElement>& xs, bool inv_t) {
    const int n = static_cast<int>(xs.size());
    if (k > n) return FieldElement();
    if (k == 0) return FieldElement::from_int(1);
    // sum over i_1 < ... < i_k of t^{k - sum i_s} prod_s (x_{i_s} - t^{s-k})
    std::vector<int> comb(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) comb[static_cast<size_t>(s)] = s + 1;
    FieldElement sum;
    for (;;) {
        long isum = 0;
        FieldElement prod = FieldElement::from_int(1);
        for (int s = 1; s <= k; ++s) {
            int i = comb[static_cast<size_t>(s) - 1];
            isum += i;
            prod = prod * (xs[static_cast<size_t>(i) - 1] - qt_mono(0, s - k, inv_t));
        }
        sum = sum + qt_mono(0, k - isum, inv_t) * prod;
        // next combination
        int pos = k - 1;
        while (pos >= 0 && comb[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++comb[static_cast<size_t>(pos)];
        for (int s = pos + 1; s < k; ++s)
            comb[static_cast<size_t>(s)] = comb[static_cast<size_t>(s) - 1] + 1;
    }
    return sum;
}

FieldElement Ctx::e_star_at_qminus(int k, const Partition& mu, int n) {
    std::vector<FieldElement> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(qt_mono(-mu.part(i), 0, false));
    return e_star_eval(k, xs, true);
}

FieldElement monomial_sym_eval(const Partition& rho, const std::vector<FieldElement>& vals) {
    const size_t n = vals.size();
    if (static_cast<size_t>(rho.length()) > n) return FieldElement();
    std::vector<int> exps(n, 0);
    for (int i = 1; i <= rho.length(); ++i) exps[static_cast<size_t>(i) - 1] = rho.part(i);
    std::sort(exps.begin(), exps.end());
    std::vector<std::pair<Poly, Poly>> parts;
    do {
        FieldElement prod = FieldElement::from_int(1);
        for (size_t i = 0; i < n; ++i)
            if (exps[i] != 0) prod = prod * vals[i].pow(exps[i]);
        parts.emplace_back(prod.num(), prod.den());
    } while (std::next_permutation(exps.begin(), exps.end()));
    return fraction_sum(std::move(parts));
}

bool Ctx::disk_load(const PKey& key, ShiftedSymPoly& out) {
    if (disk_dir_.empty()) return false;
    std::filesystem::path path = std::filesystem::path(disk_dir_) / cache_name(key);
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        out = ShiftedSymPoly(std::get<1>(key), field_from_json_string(buf.str()));
        return true;
    } catch (const error&) {
        return false;  // corrupt cache entry: fall through to recompute
    }
}

void Ctx::disk_store(const PKey& key, const ShiftedSymPoly& p) {
    if (disk_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(disk_dir_, ec);
    std::filesystem::path path = std::filesystem::path(disk_dir_) / cache_name(key);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream outf(tmp);
        if (!outf) return;
        outf << field_json_string(p.f);
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace macbinom
