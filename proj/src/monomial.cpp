#include "tropcirc/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropcirc {

monomial::monomial(std::vector<std::pair<var_t, exp_t>> entries) {
    std::map<var_t, std::uint64_t> acc;
    for (const auto& [v, e] : entries) acc[v] += e;
    entries_.reserve(acc.size());
    for (const auto& [v, e] : acc) {
        if (e == 0) continue;
        require(e <= UINT32_MAX, errc::cap, "monomial: exponent overflow");
        entries_.emplace_back(v, static_cast<exp_t>(e));
    }
}

std::uint64_t monomial::degree() const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

exp_t monomial::exponent(var_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const auto& p, var_t x) { return p.first < x; });
    return (it != entries_.end() && it->first == i) ? it->second : 0;
}

bool monomial::is_multilinear() const {
    for (const auto& [v, e] : entries_)
        if (e > 1) return false;
    return true;
}

monomial monomial::times(const monomial& o) const {
    monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            r.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            std::uint64_t e = static_cast<std::uint64_t>(a->second) + b->second;
            require(e <= UINT32_MAX, errc::cap, "monomial: exponent overflow");
            r.entries_.emplace_back(a->first, static_cast<exp_t>(e));
            ++a, ++b;
        }
    }
    return r;
}

monomial monomial::without_var(var_t i) const {
    monomial r;
    bool found = false;
    for (const auto& p : entries_) {
        if (p.first == i) {
            found = true;
            continue;
        }
        r.entries_.push_back(p);
    }
    require(found, errc::precondition, "monomial: variable not present");
    return r;
}

bool monomial::contains(const monomial& q) const {
    auto a = entries_.begin();
    for (const auto& [v, e] : q.entries_) {
        while (a != entries_.end() && a->first < v) ++a;
        if (a == entries_.end() || a->first != v || a->second < e) return false;
    }
    return true;
}

std::vector<monomial> monomial::degree_r_factors(exp_t r) const {
    std::vector<monomial> out;
    std::vector<std::pair<var_t, exp_t>> cur;
    // Entry-by-entry choice of a sub-exponent, total fixed to r.
    auto rec = [&](auto&& self, std::size_t idx, exp_t remaining) -> void {
        if (remaining == 0) {
            monomial m;
            m.entries_ = cur;
            out.push_back(std::move(m));
            return;
        }
        if (idx == entries_.size()) return;
        std::uint64_t rest = 0;
        for (std::size_t j = idx; j < entries_.size(); ++j) rest += entries_[j].second;
        if (rest < remaining) return;
        const auto [v, e] = entries_[idx];
        exp_t top = std::min<std::uint64_t>(e, remaining);
        for (exp_t take = 0; take <= top; ++take) {
            if (take > 0) cur.emplace_back(v, take);
            self(self, idx + 1, remaining - take);
            if (take > 0) cur.pop_back();
        }
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

var_t monomial::max_var() const {
    require(!entries_.empty(), errc::internal, "monomial: max_var of constant");
    return entries_.back().first;
}

bool operator<(const monomial& a, const monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Dense lexicographic comparison via the merged sparse entries.
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        // The list with the smaller next variable has a positive exponent
        // where the other has zero.
        if (i->first != j->first) return j->first < i->first;
        if (i->second != j->second) return i->second < j->second;
        ++i, ++j;
    }
    return i == a.entries_.end() && j != b.entries_.end();
}

std::size_t monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, e] : entries_) {
        h = (h ^ v) * 1099511628211ull;
        h = (h ^ e) * 1099511628211ull;
    }
    return h;
}

std::string monomial::str() const {
    if (entries_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : entries_) {
        if (!first) os << "*";
        first = false;
        os << "x" << v;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace tropcirc
