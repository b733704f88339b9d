#include "macbinom/partition.hpp"

#include <algorithm>
#include <map>

namespace macbinom {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0 || (i + 1 < p_.size() && p_[i] < p_[i + 1]))
            throw parse_error("not a partition");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t end = s.size();
    while (end > i && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    if (i == end) return Partition();
    int cur = 0;
    bool have = false;
    for (; i <= end; ++i) {
        if (i == end || s[i] == ',') {
            if (!have) throw parse_error("bad partition string: " + s);
            parts.push_back(cur);
            cur = 0;
            have = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            cur = cur * 10 + (s[i] - '0');
            if (cur > 100000) throw parse_error("partition part too large");
            have = true;
        } else if (s[i] == ' ') {
            // allow spaces around commas
        } else {
            throw parse_error("bad partition string: " + s);
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    int s = 0;
    for (int v : p_) s += v;
    return s;
}

int Partition::part(int i) const {
    if (i < 1 || i > static_cast<int>(p_.size())) return 0;
    return p_[static_cast<size_t>(i) - 1];
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (p_.empty()) return Partition();
    c.resize(static_cast<size_t>(p_[0]));
    for (int j = 1; j <= p_[0]; ++j) c[static_cast<size_t>(j) - 1] = conj_part(j);
    return Partition(std::move(c));
}

int Partition::conj_part(int j) const {
    int cnt = 0;
    for (int v : p_)
        if (v >= j) ++cnt;
    return cnt;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < p_.size(); ++i) s += static_cast<long>(i) * p_[i];
    return s;
}

std::vector<int> Partition::removable_rows() const {
    std::vector<int> r;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > part(i + 1)) r.push_back(i);
    return r;
}

std::vector<int> Partition::addable_rows() const {
    std::vector<int> r;
    for (int i = 1; i <= length() + 1; ++i) {
        int prev = (i == 1) ? -1 : part(i - 1);  // nu_0 = +infinity
        if (i == 1 || prev > part(i)) r.push_back(i);
    }
    return r;
}

Partition Partition::add_box(int row) const {
    std::vector<int> v = p_;
    if (row == length() + 1)
        v.push_back(1);
    else
        v[static_cast<size_t>(row) - 1] += 1;
    return Partition(std::move(v));
}

Partition Partition::remove_box(int row) const {
    std::vector<int> v = p_;
    v[static_cast<size_t>(row) - 1] -= 1;
    return Partition(std::move(v));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p_[i]);
    }
    return s;
}

HookData hook_data(const Partition& lambda, Box s) {
    if (s.row < 1 || s.col < 1 || s.col > lambda.part(s.row))
        throw contract_error("box outside the diagram");
    HookData h;
    h.arm = lambda.part(s.row) - s.col;
    h.coarm = s.col - 1;
    h.leg = lambda.conj_part(s.col) - s.row;
    h.coleg = s.row - 1;
    return h;
}

std::vector<Box> boxes_of(const Partition& lambda) {
    std::vector<Box> b;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) b.push_back({i, j});
    return b;
}

Partition complement(int b, int n, const Partition& lambda) {
    if (lambda.part(1) > b || lambda.length() > n)
        throw contract_error("partition does not fit in the box");
    std::vector<int> v;
    for (int i = n; i >= 1; --i) v.push_back(b - lambda.part(i));
    return Partition(std::move(v));
}

namespace {

void enum_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enum_rec(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_size, int max_parts) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        std::vector<int> cur;
        enum_rec(s, s, max_parts, cur, out);
    }
    return out;
}

CornerPoints corner_points(const Partition& nu, int star_row) {
    auto addable = nu.addable_rows();
    if (std::find(addable.begin(), addable.end(), star_row) == addable.end())
        throw contract_error("star row is not an addable row");
    CornerPoints cp;
    for (int i : nu.removable_rows()) cp.outer.emplace_back(i, nu.part(i));
    for (int i : addable)
        if (i != star_row) cp.inner.emplace_back(i - 1, nu.part(i));
    cp.star = {star_row, nu.part(star_row) + 1};
    return cp;
}

int ReverseTableau::entry(int row, int col) const {
    int idx = 0;
    for (int i = 1; i < row; ++i) idx += shape_.part(i);
    return e_[static_cast<size_t>(idx + col - 1)];
}

std::vector<Partition> ReverseTableau::chain(int n) const {
    std::vector<Partition> out;
    for (int r = 1; r <= n + 1; ++r) {
        std::vector<int> rows;
        for (int i = 1; i <= shape_.length(); ++i) {
            int cnt = 0;
            for (int j = 1; j <= shape_.part(i); ++j)
                if (entry(i, j) >= r) ++cnt;
            if (cnt) rows.push_back(cnt);
            else break;  // row lengths are nested
        }
        out.emplace_back(std::move(rows));
    }
    return out;
}

namespace {

void tab_rec(const Partition& shape, int n, std::vector<int>& e, size_t pos,
             const std::vector<Box>& bx, std::vector<ReverseTableau>& out) {
    if (pos == bx.size()) {
        out.emplace_back(shape, e);
        return;
    }
    const Box b = bx[pos];
    int hi = n;
    int lo = 1;
    // Weakly decreasing along the row, strictly decreasing down the column.
    if (b.col > 1) hi = std::min(hi, e[pos - 1]);
    if (b.row > 1) {
        // position of (row-1, col)
        size_t above = 0;
        int idx = 0;
        for (int i = 1; i < b.row - 1; ++i) idx += shape.part(i);
        above = static_cast<size_t>(idx + b.col - 1);
        hi = std::min(hi, e[above] - 1);
    }
    for (int v = hi; v >= lo; --v) {
        e[pos] = v;
        tab_rec(shape, n, e, pos + 1, bx, out);
    }
}

}  // namespace

std::vector<ReverseTableau> enumerate_reverse_tableaux(const Partition& shape, int n) {
    std::vector<ReverseTableau> out;
    if (shape.empty()) {
        out.emplace_back(shape, std::vector<int>{});
        return out;
    }
    if (shape.length() > n) return out;  // a column would repeat an entry
    auto bx = boxes_of(shape);
    std::vector<int> e(bx.size());
    tab_rec(shape, n, e, 0, bx, out);
    return out;
}

namespace {

Int dim_rec(const Partition& lambda, const Partition& mu,
            std::map<std::pair<Partition, Partition>, Int>& memo) {
    if (lambda == mu) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // Remove one corner box of lambda staying above mu.
    Int total = 0;
    for (int i : lambda.removable_rows()) {
        if (lambda.part(i) - 1 >= mu.part(i)) {
            Partition prev = lambda.remove_box(i);
            if (prev.contains(mu)) total += dim_rec(prev, mu, memo);
        }
    }
    memo[key] = total;
    return total;
}

}  // namespace

Int dim_standard(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return 0;
    std::map<std::pair<Partition, Partition>, Int> memo;
    return dim_rec(lambda, mu, memo);
}

Int multinomial3(int total, int k1, int k2) {
    if (k1 < 0 || k2 < 0 || k1 + k2 > total) return 0;
    Int r = 1;
    Int denom = 1;
    // total! / (k1! k2! (total-k1-k2)!)
    auto fact = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    r = fact(total);
    denom = fact(k1) * fact(k2) * fact(total - k1 - k2);
    return r / denom;
}

}  // namespace macbinom
