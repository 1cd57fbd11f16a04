#include "tropcirc/equivalence.hpp"

#include <random>

namespace tropcirc {

bool equivalent_arith(const polynomial& f, const polynomial& h) { return f.exact_equal(h); }

equiv_result equivalent_min_nat(const polynomial& f, const polynomial& h) {
    if (f.empty() || h.empty())
        return {f.empty() == h.empty() ? verdict::equivalent : verdict::inequivalent,
                std::nullopt};
    if (!f.is_multilinear() && !h.is_multilinear()) return {verdict::undecided, std::nullopt};
    bool eq = f.lmin_set().set_equal(h.lmin_set());
    return {eq ? verdict::equivalent : verdict::inequivalent, std::nullopt};
}

equiv_result equivalent_max_nat(const polynomial& f, const polynomial& h) {
    if (f.empty() || h.empty())
        return {f.empty() == h.empty() ? verdict::equivalent : verdict::inequivalent,
                std::nullopt};
    bool fm = f.is_multilinear(), hm = h.is_multilinear();
    if (!fm && !hm) return {verdict::undecided, std::nullopt};
    // Equivalence with a multilinear side forces both sides multilinear.
    if (fm != hm) return {verdict::inequivalent, std::nullopt};
    bool eq = f.lmax_set().set_equal(h.lmax_set());
    return {eq ? verdict::equivalent : verdict::inequivalent, std::nullopt};
}

equiv_result equal_tropical_int(const polynomial& f, const polynomial& h) {
    if (f.empty() || h.empty())
        return {f.empty() == h.empty() ? verdict::equivalent : verdict::inequivalent,
                std::nullopt};
    if (!f.is_multilinear() && !h.is_multilinear()) return {verdict::undecided, std::nullopt};
    bool eq = f.set_equal(h);
    return {eq ? verdict::equivalent : verdict::inequivalent, std::nullopt};
}

bool equivalent_bool(const polynomial& f, const polynomial& h) {
    if (f.empty() || h.empty()) return f.empty() == h.empty();
    return f.bool_multilinearize().lmin_set().set_equal(h.bool_multilinearize().lmin_set());
}

equiv_result decide_equivalence(const polynomial& f, const polynomial& h, semiring_id id) {
    require(f.n_vars() == h.n_vars(), errc::precondition, "variable universes differ");
    switch (id) {
        case semiring_id::nat_arith:
            return {equivalent_arith(f, h) ? verdict::equivalent : verdict::inequivalent,
                    std::nullopt};
        case semiring_id::boolean:
            return {equivalent_bool(f, h) ? verdict::equivalent : verdict::inequivalent,
                    std::nullopt};
        case semiring_id::min_nat: return equivalent_min_nat(f, h);
        case semiring_id::max_nat: return equivalent_max_nat(f, h);
        case semiring_id::min_int:
        case semiring_id::max_int: return equal_tropical_int(f, h);
    }
    fail(errc::internal, "decide_equivalence: bad id");
}

std::vector<ext_int> default_domain(semiring_id id) {
    switch (id) {
        case semiring_id::nat_arith: return {ext_int(0), ext_int(1), ext_int(2), ext_int(3)};
        case semiring_id::boolean: return {ext_int(0), ext_int(1)};
        case semiring_id::min_nat:
            return {ext_int(0), ext_int(1), ext_int(2), ext_int(3), ext_int::pos_inf()};
        case semiring_id::max_nat: return {ext_int(0), ext_int(1), ext_int(2), ext_int(3)};
        case semiring_id::min_int:
        case semiring_id::max_int:
            return {ext_int(-2), ext_int(-1), ext_int(0), ext_int(1), ext_int(2)};
    }
    fail(errc::internal, "default_domain: bad id");
}

std::optional<std::vector<ext_int>> exhaustive_witness(const polynomial& f, const polynomial& h,
                                                       semiring_id id,
                                                       const std::vector<ext_int>& domain) {
    require(f.n_vars() == h.n_vars(), errc::precondition, "variable universes differ");
    require(!domain.empty(), errc::precondition, "empty evaluation domain");
    const std::uint32_t n = f.n_vars();
    std::vector<std::size_t> idx(n, 0);
    std::vector<ext_int> point(n, domain[0]);
    while (true) {
        if (f.evaluate(id, point) != h.evaluate(id, point)) return point;
        std::uint32_t i = 0;
        while (i < n && ++idx[i] == domain.size()) {
            idx[i] = 0;
            point[i] = domain[0];
            ++i;
        }
        if (i == n) break;
        point[i] = domain[idx[i]];
    }
    return std::nullopt;
}

random_test_result random_equivalence_test(const polynomial& f, const polynomial& h,
                                           semiring_id id, const std::vector<ext_int>& domain,
                                           std::size_t trials, std::uint64_t seed) {
    require(f.n_vars() == h.n_vars(), errc::precondition, "variable universes differ");
    require(!domain.empty(), errc::precondition, "empty evaluation domain");
    for (const ext_int& x : domain) require_carrier(id, x);
    const std::uint32_t n = f.n_vars();
    for (std::size_t t = 0; t < trials; ++t) {
        // Per-trial stream derived from (seed, trial index): trials are
        // independent and order-insensitive.
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
        std::vector<ext_int> point(n);
        for (std::uint32_t i = 0; i < n; ++i) point[i] = domain[rng() % domain.size()];
        if (f.evaluate(id, point) != h.evaluate(id, point))
            return {random_verdict::falsified, point, t + 1};
    }
    return {random_verdict::no_witness_found, std::nullopt, trials};
}

polynomial canonical_form(const polynomial& f, semiring_id id) {
    switch (id) {
        case semiring_id::nat_arith: return f;
        case semiring_id::boolean: {
            if (f.empty()) return f;
            return f.bool_multilinearize().lmin_set().with_unit_coeffs();
        }
        case semiring_id::min_nat: {
            if (f.empty()) return f;
            polynomial l = f.lmin_set();
            require(l.is_multilinear(), errc::precondition,
                    "no canonical form known: minimal set is not multilinear");
            return l.with_unit_coeffs();
        }
        case semiring_id::max_nat: {
            if (f.empty()) return f;
            require(f.is_multilinear(), errc::precondition,
                    "no canonical form known: polynomial is not multilinear");
            return f.lmax_set().with_unit_coeffs();
        }
        case semiring_id::min_int:
        case semiring_id::max_int: {
            if (f.empty()) return f;
            require(f.is_multilinear(), errc::precondition,
                    "no canonical form known: polynomial is not multilinear");
            return f.with_unit_coeffs();
        }
    }
    fail(errc::internal, "canonical_form: bad id");
}

}  // namespace tropcirc
