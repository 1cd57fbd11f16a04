#include "tropcirc/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace tropcirc {

namespace {

coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    require(!__builtin_add_overflow(a, b, &r), errc::cap, "coefficient overflow");
    return r;
}

coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    require(!__builtin_mul_overflow(a, b, &r), errc::cap, "coefficient overflow");
    return r;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

polynomial::polynomial(std::uint32_t n_vars, std::vector<std::pair<monomial, coeff_t>> terms)
    : n_vars_(n_vars) {
    for (auto& [m, c] : terms) add_term(m, c);
}

polynomial polynomial::unit(std::uint32_t n_vars) {
    polynomial p(n_vars);
    p.add_term(monomial::one(), 1);
    return p;
}

polynomial polynomial::variable(std::uint32_t n_vars, var_t i) {
    require(i < n_vars, errc::range, "variable index out of universe");
    polynomial p(n_vars);
    p.add_term(monomial::var(i), 1);
    return p;
}

coeff_t polynomial::coeff(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<monomial> polynomial::monomials() const {
    std::vector<monomial> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m);
    return out;
}

void polynomial::add_term(const monomial& m, coeff_t c) {
    if (c == 0) return;
    if (!m.is_one())
        require(m.max_var() < n_vars_, errc::range, "monomial variable outside the universe");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) it->second = checked_add(it->second, c);
}

void polynomial::check_universe(const polynomial& o) const {
    require(n_vars_ == o.n_vars_, errc::precondition, "variable universes differ");
}

polynomial polynomial::plus(const polynomial& o) const {
    check_universe(o);
    polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

polynomial polynomial::times(const polynomial& o, std::size_t term_cap) const {
    check_universe(o);
    std::size_t estimate = terms_.size() * o.terms_.size();
    polynomial r(n_vars_);
    for (const auto& [p, cp] : terms_) {
        for (const auto& [q, cq] : o.terms_) {
            r.add_term(p.times(q), checked_mul(cp, cq));
            require(r.terms_.size() <= term_cap, errc::cap,
                    "product explosion: more than " + std::to_string(term_cap) +
                        " terms (pairwise estimate " + std::to_string(estimate) + ")");
        }
    }
    return r;
}

ext_int polynomial::min_degree() const {
    if (terms_.empty()) return ext_int::pos_inf();
    std::uint64_t best = UINT64_MAX;
    for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
    return ext_int(static_cast<std::int64_t>(best));
}

ext_int polynomial::max_degree() const {
    if (terms_.empty()) return ext_int::neg_inf();
    std::uint64_t best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
    return ext_int(static_cast<std::int64_t>(best));
}

ext_int polynomial::min_length() const {
    if (terms_.empty()) return ext_int::pos_inf();
    std::uint64_t best = UINT64_MAX;
    for (const auto& [m, c] : terms_) best = std::min<std::uint64_t>(best, m.length());
    return ext_int(static_cast<std::int64_t>(best));
}

bool polynomial::is_multilinear() const {
    for (const auto& [m, c] : terms_)
        if (!m.is_multilinear()) return false;
    return true;
}

bool polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

polynomial polynomial::lmin_set() const {
    require(!terms_.empty(), errc::precondition, "lmin of the empty polynomial");
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
        bool minimal = true;
        for (const auto& [q, cq] : terms_) {
            if (q != m && m.contains(q)) {
                minimal = false;
                break;
            }
        }
        if (minimal) r.add_term(m, c);
    }
    return r;
}

polynomial polynomial::lmax_set() const {
    require(!terms_.empty(), errc::precondition, "lmax of the empty polynomial");
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
        bool maximal = true;
        for (const auto& [q, cq] : terms_) {
            if (q != m && q.contains(m)) {
                maximal = false;
                break;
            }
        }
        if (maximal) r.add_term(m, c);
    }
    return r;
}

polynomial polynomial::lower_envelope() const {
    require(!terms_.empty(), errc::precondition, "envelope of the empty polynomial");
    std::uint64_t d = static_cast<std::uint64_t>(min_degree().value());
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

polynomial polynomial::higher_envelope() const {
    require(!terms_.empty(), errc::precondition, "envelope of the empty polynomial");
    std::uint64_t d = static_cast<std::uint64_t>(max_degree().value());
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

std::uint64_t polynomial::factor_density(exp_t r, std::uint64_t work_cap) const {
    require(!terms_.empty(), errc::precondition, "factor density of the empty polynomial");
    require(ext_int(static_cast<std::int64_t>(r)) <= max_degree(), errc::range,
            "factor degree exceeds the maximum degree");
    if (r == 0) return terms_.size();
    std::unordered_map<monomial, std::uint64_t, monomial_hash> counts;
    std::uint64_t work = 0;
    std::uint64_t best = 0;
    for (const auto& [m, c] : terms_) {
        if (m.degree() < r) continue;
        for (monomial& q : m.degree_r_factors(r)) {
            require(++work <= work_cap, errc::cap, "factor density work cap exceeded");
            best = std::max(best, ++counts[std::move(q)]);
        }
    }
    return best;
}

polynomial polynomial::partial_derivative(var_t i) const {
    require(is_multilinear(), errc::precondition,
            "partial derivative requires a multilinear polynomial");
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_)
        if (m.exponent(i) > 0) r.add_term(m.without_var(i), c);
    return r;
}

polynomial polynomial::saturate_low() const {
    require(is_multilinear() && is_homogeneous(), errc::precondition,
            "saturation requires a multilinear homogeneous polynomial");
    polynomial r = *this;
    for (var_t i = 0; i < n_vars_; ++i)
        if (!r.has_monomial(monomial::var(i))) r.add_term(monomial::var(i), 1);
    return r;
}

polynomial polynomial::saturate_high() const {
    require(is_multilinear() && is_homogeneous(), errc::precondition,
            "saturation requires a multilinear homogeneous polynomial");
    std::vector<std::pair<var_t, exp_t>> full;
    for (var_t i = 0; i < n_vars_; ++i) full.emplace_back(i, 1);
    polynomial r = *this;
    monomial all(full);
    if (!r.has_monomial(all)) r.add_term(all, 1);
    return r;
}

polynomial polynomial::enrich(var_t k, var_t i, var_t j, enrich_mode mode) const {
    require(k != i && k != j, errc::precondition, "enrichment must replace a third variable");
    bool occurs = false;
    for (const auto& [m, c] : terms_) occurs = occurs || m.exponent(k) > 0;
    require(occurs, errc::precondition, "enrichment variable does not occur");
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
        exp_t a = m.exponent(k);
        if (a == 0) {
            r.add_term(m, c);
            continue;
        }
        monomial base = m.without_var(k);
        if (mode == enrich_mode::product) {
            r.add_term(base.times(monomial({{i, a}, {j, a}})), c);
        } else {
            for (exp_t t = 0; t <= a; ++t) {
                std::vector<std::pair<var_t, exp_t>> extra;
                if (t > 0) extra.emplace_back(i, t);
                if (a - t > 0) extra.emplace_back(j, a - t);
                r.add_term(base.times(monomial(extra)), checked_mul(c, binomial(a, t)));
            }
        }
    }
    return r;
}

polynomial polynomial::bool_multilinearize() const {
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<var_t, exp_t>> clamped;
        for (const auto& [v, e] : m.entries()) clamped.emplace_back(v, 1);
        r.add_term(monomial(clamped), c);
    }
    return r;
}

ext_int polynomial::evaluate(semiring_id id, const std::vector<ext_int>& assignment) const {
    require(assignment.size() == n_vars_, errc::precondition,
            "assignment length differs from the variable universe");
    for (const ext_int& x : assignment) require_carrier(id, x);
    const auto [zero, one] = sr_constants(id);
    ext_int acc = zero;
    for (const auto& [m, c] : terms_) {
        ext_int term = one;
        for (const auto& [v, e] : m.entries()) {
            ext_int powed;
            if (id == semiring_id::boolean) {
                powed = assignment[v];  // x^e = x on {0,1}
            } else if (is_tropical(id)) {
                powed = assignment[v].checked_scale(e);  // exponent = scalar multiplier
            } else {
                powed = assignment[v];
                for (exp_t t = 1; t < e; ++t) powed = sr_mul(id, powed, assignment[v]);
            }
            term = sr_mul(id, term, powed);
        }
        if (id == semiring_id::nat_arith) {
            require(c <= static_cast<coeff_t>(INT64_MAX), errc::cap, "coefficient overflow");
            term = sr_mul(id, term, ext_int(static_cast<std::int64_t>(c)));
        }
        acc = sr_add(id, acc, term);
    }
    return acc;
}

std::set<var_t> polynomial::support() const {
    std::set<var_t> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) s.insert(v);
    return s;
}

bool polynomial::set_equal(const polynomial& o) const {
    if (n_vars_ != o.n_vars_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first) return false;
    return true;
}

bool polynomial::subset_of(const polynomial& o) const {
    if (n_vars_ != o.n_vars_) return false;
    for (const auto& [m, c] : terms_)
        if (!o.has_monomial(m)) return false;
    return true;
}

polynomial polynomial::with_unit_coeffs() const {
    polynomial r(n_vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, 1);
    return r;
}

std::uint64_t polynomial::set_hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(n_vars_) << 32);
    for (const auto& [m, c] : terms_) {
        std::uint64_t x = m.hash();
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        h += x;  // commutative mix keeps the digest order-independent
    }
    return h;
}

}  // namespace tropcirc
