#include "tropcirc/oracle.hpp"

#include <algorithm>
#include <atomic>

#include "tropcirc/equivalence.hpp"

namespace tropcirc {
namespace oracle {

namespace {

constexpr std::int64_t value_sat = 1ll << 60;

// Saturating semiring arithmetic for grid signatures. Saturation is
// absorbing under every grid operation, so two saturated values are
// interchangeable in any circuit context whose final outputs stay small;
// target values are checked to lie far below the saturation band.
ext_int sat_add(semiring_id id, const ext_int& a, const ext_int& b) {
    switch (id) {
        case semiring_id::nat_arith: {
            std::int64_t r;
            if (__builtin_add_overflow(a.value(), b.value(), &r) || r > value_sat)
                return ext_int(value_sat);
            return ext_int(r);
        }
        case semiring_id::boolean: return ext_int(a.value() | b.value());
        case semiring_id::min_nat:
        case semiring_id::min_int: return min(a, b);
        case semiring_id::max_nat:
        case semiring_id::max_int: return max(a, b);
    }
    fail(errc::internal, "sat_add");
}

ext_int sat_plus_clamped(const ext_int& a, const ext_int& b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return ext_int::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return ext_int::neg_inf();
    std::int64_t r;
    if (__builtin_add_overflow(a.value(), b.value(), &r)) r = a.value() > 0 ? value_sat : -value_sat;
    if (r > value_sat) r = value_sat;
    if (r < -value_sat) r = -value_sat;
    return ext_int(r);
}

ext_int sat_mul(semiring_id id, const ext_int& a, const ext_int& b) {
    switch (id) {
        case semiring_id::nat_arith: {
            __int128 r = static_cast<__int128>(a.value()) * b.value();
            if (r > value_sat) return ext_int(value_sat);
            return ext_int(static_cast<std::int64_t>(r));
        }
        case semiring_id::boolean: return ext_int(a.value() & b.value());
        case semiring_id::min_nat:
        case semiring_id::min_int:
        case semiring_id::max_nat:
        case semiring_id::max_int: return sat_plus_clamped(a, b);
    }
    fail(errc::internal, "sat_mul");
}

std::uint64_t sig_hash(const std::vector<ext_int>& sig) {
    std::uint64_t h = 1469598103934665603ull;
    for (const ext_int& x : sig) {
        std::uint64_t v = x.is_pos_inf() ? 0x7ffffffffffffffeull
                          : x.is_neg_inf() ? 0x8000000000000001ull
                                           : static_cast<std::uint64_t>(x.value());
        h = (h ^ v) * 1099511628211ull;
    }
    return h;
}

// --- produce-mode search ---------------------------------------------------

struct produce_ctx {
    const polynomial& f;
    std::size_t target_size;
    std::vector<monomial> f_mons;
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> states{0};

    explicit produce_ctx(const polynomial& ff, std::size_t sz) : f(ff), target_size(sz) {
        f_mons = ff.monomials();
    }

    bool divides_some(const monomial& m) const {
        for (const monomial& p : f_mons)
            if (p.contains(m)) return true;
        return false;
    }
};

struct produce_node {
    polynomial poly;
    std::uint64_t hash;
    bool used;
    // encoding for the adjacent-gate symmetry break; inputs get {0,0,0}
    int op;
    gate_id a, b;
};

// Candidate gate polynomials that survive the pruning rules. The search is a
// DFS over gate lists: every intermediate polynomial must be a fresh set,
// stay within |f| terms, and (for products) only make monomials dividing
// some monomial of f.
bool produce_dfs(produce_ctx& ctx, std::vector<produce_node>& nodes, std::size_t depth,
                 std::size_t n_inputs) {
    if (ctx.found.load(std::memory_order_relaxed)) return true;
    ctx.states.fetch_add(1, std::memory_order_relaxed);
    const std::size_t remaining = ctx.target_size - depth;
    std::size_t unused = 0;
    for (std::size_t i = n_inputs; i < nodes.size(); ++i) unused += !nodes[i].used;
    if (unused > remaining + 1 || (remaining == 0 && unused > 1)) return false;
    if (remaining == 0) return false;  // acceptance happens when the gate is added

    const bool last = remaining == 1;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a; b < nodes.size(); ++b) {
            for (int op = 0; op < 2; ++op) {
                polynomial cand(ctx.f.n_vars());
                if (op == 0) {
                    cand = nodes[a].poly.plus(nodes[b].poly);
                } else {
                    bool ok = true;
                    for (const auto& [p, cp] : nodes[a].poly.terms()) {
                        for (const auto& [q, cq] : nodes[b].poly.terms()) {
                            monomial m = p.times(q);
                            if (!ctx.divides_some(m)) {
                                ok = false;
                                break;
                            }
                            cand.add_term(m, 1);
                        }
                        if (!ok) break;
                    }
                    if (!ok) continue;
                }
                if (cand.term_count() > ctx.f.term_count()) continue;
                std::uint64_t h = cand.set_hash();
                bool dup = false;
                for (const produce_node& n : nodes)
                    if (n.hash == h && n.poly.set_equal(cand)) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                if (last) {
                    if (cand.set_equal(ctx.f)) {
                        // all earlier gates must feed something
                        bool all_used = true;
                        for (std::size_t i = n_inputs; i < nodes.size(); ++i)
                            all_used = all_used && (nodes[i].used || i == a || i == b);
                        if (all_used) {
                            ctx.found.store(true, std::memory_order_relaxed);
                            return true;
                        }
                    }
                    continue;
                }
                bool ua = nodes[a].used, ub = nodes[b].used;
                nodes[a].used = nodes[b].used = true;
                nodes.push_back(produce_node{std::move(cand), h, false, op,
                                             static_cast<gate_id>(a), static_cast<gate_id>(b)});
                bool hit = produce_dfs(ctx, nodes, depth + 1, n_inputs);
                nodes.pop_back();
                nodes[a].used = ua;
                nodes[b].used = ub;
                if (hit) return true;
            }
        }
    }
    return false;
}

std::vector<produce_node> produce_base_nodes(const polynomial& f) {
    std::vector<produce_node> nodes;
    for (var_t v : f.support())
        nodes.push_back(produce_node{polynomial::variable(f.n_vars(), v),
                                     polynomial::variable(f.n_vars(), v).set_hash(), true, 0, 0,
                                     0});
    polynomial one = polynomial::unit(f.n_vars());
    nodes.push_back(produce_node{one, one.set_hash(), true, 0, 0, 0});
    return nodes;
}

bool produce_search_at(const polynomial& f, std::size_t size, exec ex, std::uint64_t& states) {
#ifndef _OPENMP
    ex = exec::serial;
#endif
    produce_ctx ctx(f, size);
    std::vector<produce_node> base = produce_base_nodes(f);
    const std::size_t n_inputs = base.size();
    if (size == 0) {
        for (const produce_node& n : base)
            if (n.poly.set_equal(f)) return true;
        return f.empty();  // the constant-0 input node
    }

    bool hit = false;
    if (ex == exec::openmp) {
#ifdef _OPENMP
        // Fan out over the first gate; each task owns a private node list.
        std::vector<std::tuple<int, std::size_t, std::size_t>> first;
        for (std::size_t a = 0; a < base.size(); ++a)
            for (std::size_t b = a; b < base.size(); ++b)
                for (int op = 0; op < 2; ++op) first.emplace_back(op, a, b);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(first.size()); ++i) {
            if (ctx.found.load(std::memory_order_relaxed)) continue;
            auto [op, a, b] = first[i];
            std::vector<produce_node> nodes = base;
            polynomial cand = op == 0 ? nodes[a].poly.plus(nodes[b].poly)
                                      : nodes[a].poly.times(nodes[b].poly);
            if (op == 1) {
                bool ok = true;
                for (const auto& [m, c] : cand.terms()) ok = ok && ctx.divides_some(m);
                if (!ok) continue;
            }
            if (cand.term_count() > f.term_count()) continue;
            std::uint64_t h = cand.set_hash();
            bool dup = false;
            for (const produce_node& n : nodes)
                if (n.hash == h && n.poly.set_equal(cand)) dup = true;
            if (dup) continue;
            if (size == 1) {
                if (cand.set_equal(f)) ctx.found.store(true);
                continue;
            }
            nodes.push_back(produce_node{std::move(cand), h, false, op, static_cast<gate_id>(a),
                                         static_cast<gate_id>(b)});
            produce_dfs(ctx, nodes, 1, n_inputs);
        }
        hit = ctx.found.load();
#endif
    }
    if (ex == exec::serial) {
        std::vector<produce_node> nodes = base;
        hit = produce_dfs(ctx, nodes, 0, n_inputs);
    }
    states += ctx.states.load();
    return hit;
}

}  // namespace

produce_size_result min_produce_size(const polynomial& f, const options& opt) {
    require(f.n_vars() <= 4, errc::cap, "produce-size oracle limited to 4 variables");
    require(opt.max_size <= 7, errc::cap, "produce-size oracle limited to 7 gates");
    produce_size_result res;
    for (std::size_t s = 0; s <= opt.max_size; ++s) {
        if (produce_search_at(f, s, opt.ex, res.states)) {
            res.found = true;
            res.size = s;
            return res;
        }
    }
    return res;
}

// --- compute-mode search ---------------------------------------------------

std::vector<ext_int> oracle_domain(semiring_id id) {
    switch (id) {
        case semiring_id::min_nat:
            return {ext_int(0), ext_int(1), ext_int(2), ext_int::pos_inf()};
        case semiring_id::max_nat:
        case semiring_id::nat_arith: return {ext_int(0), ext_int(1), ext_int(2)};
        case semiring_id::min_int:
        case semiring_id::max_int: return {ext_int(-1), ext_int(0), ext_int(1)};
        case semiring_id::boolean: return {ext_int(0), ext_int(1)};
    }
    fail(errc::internal, "oracle_domain: bad id");
}

namespace {

struct compute_node {
    std::vector<ext_int> sig;
    std::uint64_t hash;
    std::uint32_t support;  // variable mask, for the multilinear restriction
    bool used;
    int op;
    gate_id a, b;
    gate g;  // reconstruction info
};

struct compute_ctx {
    semiring_id id;
    std::size_t target_size;
    bool multilinear_only;
    std::vector<ext_int> target;
    std::uint64_t target_hash;
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> states{0};
    // Only the compare-exchange winner writes the witness; the implicit
    // barrier at the end of the parallel region publishes it.
    circuit witness{0};
    std::vector<gate> base_gates;
};

std::vector<ext_int> combine(const compute_ctx& ctx, int op, const std::vector<ext_int>& a,
                             const std::vector<ext_int>& b) {
    std::vector<ext_int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = op == 0 ? sat_add(ctx.id, a[i], b[i]) : sat_mul(ctx.id, a[i], b[i]);
    return r;
}

void record_witness(compute_ctx& ctx, const std::vector<compute_node>& nodes,
                    std::size_t n_inputs, std::size_t la, std::size_t lb, int lop,
                    std::uint32_t n_vars) {
    circuit c(n_vars);
    for (std::size_t i = 0; i < n_inputs; ++i) {
        const gate& g = ctx.base_gates[i];
        if (g.op == gate::kind::var)
            c.add_var(g.var_index);
        else if (g.op == gate::kind::const_zero)
            c.add_zero();
        else
            c.add_one();
    }
    for (std::size_t i = n_inputs; i < nodes.size(); ++i) {
        if (nodes[i].op == 0)
            c.add_sum(nodes[i].a, nodes[i].b);
        else
            c.add_prod(nodes[i].a, nodes[i].b);
    }
    gate_id out = lop == 0 ? c.add_sum(static_cast<gate_id>(la), static_cast<gate_id>(lb))
                           : c.add_prod(static_cast<gate_id>(la), static_cast<gate_id>(lb));
    c.set_outputs({out});
    ctx.witness = std::move(c);
}

bool compute_dfs(compute_ctx& ctx, std::vector<compute_node>& nodes, std::size_t depth,
                 std::size_t n_inputs, std::uint32_t n_vars) {
    if (ctx.found.load(std::memory_order_relaxed)) return true;
    ctx.states.fetch_add(1, std::memory_order_relaxed);
    const std::size_t remaining = ctx.target_size - depth;
    std::size_t unused = 0;
    for (std::size_t i = n_inputs; i < nodes.size(); ++i) unused += !nodes[i].used;
    if (unused > remaining + 1 || remaining == 0) return false;

    const bool last = remaining == 1;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a; b < nodes.size(); ++b) {
            for (int op = 0; op < 2; ++op) {
                if (ctx.multilinear_only && op == 1 && (nodes[a].support & nodes[b].support))
                    continue;
                std::vector<ext_int> sig = combine(ctx, op, nodes[a].sig, nodes[b].sig);
                std::uint64_t h = sig_hash(sig);
                if (last) {
                    if (h == ctx.target_hash && sig == ctx.target) {
                        bool all_used = true;
                        for (std::size_t i = n_inputs; i < nodes.size(); ++i)
                            all_used = all_used && (nodes[i].used || i == a || i == b);
                        if (all_used) {
                            bool expected = false;
                            if (ctx.found.compare_exchange_strong(expected, true))
                                record_witness(ctx, nodes, n_inputs, a, b, op, n_vars);
                            return true;
                        }
                    }
                    continue;
                }
                bool dup = false;
                for (const compute_node& n : nodes)
                    if (n.hash == h && n.sig == sig) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                bool ua = nodes[a].used, ub = nodes[b].used;
                nodes[a].used = nodes[b].used = true;
                nodes.push_back(compute_node{std::move(sig), h,
                                             nodes[a].support | nodes[b].support, false, op,
                                             static_cast<gate_id>(a), static_cast<gate_id>(b),
                                             gate{}});
                bool hit = compute_dfs(ctx, nodes, depth + 1, n_inputs, n_vars);
                nodes.pop_back();
                nodes[a].used = ua;
                nodes[b].used = ub;
                if (hit) return true;
            }
        }
    }
    return false;
}

}  // namespace

compute_size_result min_compute_size(const polynomial& f, semiring_id id,
                                     const std::vector<ext_int>& domain, const options& opt,
                                     bool restrict_multilinear) {
    require(f.n_vars() <= 4, errc::cap, "compute-size oracle limited to 4 variables");
    require(opt.max_size <= 7, errc::cap, "compute-size oracle limited to 7 gates");
    require(!domain.empty(), errc::precondition, "empty oracle domain");
    for (const ext_int& x : domain) require_carrier(id, x);
    const std::uint32_t n = f.n_vars();

    // The full grid domain^n.
    std::vector<std::vector<ext_int>> points;
    {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<ext_int> p(n);
            for (std::uint32_t i = 0; i < n; ++i) p[i] = domain[idx[i]];
            points.push_back(std::move(p));
            std::uint32_t i = 0;
            while (i < n && ++idx[i] == domain.size()) idx[i++] = 0;
            if (i == n) break;
        }
    }

    compute_ctx ctx;
    ctx.id = id;
    ctx.multilinear_only = restrict_multilinear;
    for (const auto& p : points) {
        ext_int v = f.evaluate(id, p);
        require(!v.is_finite() || (v.value() < value_sat / 2 && v.value() > -value_sat / 2),
                errc::cap, "target values too close to the saturation band");
        ctx.target.push_back(v);
    }
    ctx.target_hash = sig_hash(ctx.target);

    // Base nodes: all variables plus the two semiring constants.
    std::vector<compute_node> base;
    const auto [zero, one] = sr_constants(id);
    for (var_t v = 0; v < n; ++v) {
        std::vector<ext_int> sig;
        sig.reserve(points.size());
        for (const auto& p : points) sig.push_back(p[v]);
        base.push_back(compute_node{std::move(sig), 0, 1u << v, true, 0, 0, 0,
                                    gate{gate::kind::var, v, 0, 0}});
    }
    base.push_back(compute_node{std::vector<ext_int>(points.size(), zero), 0, 0, true, 0, 0, 0,
                                gate{gate::kind::const_zero, 0, 0, 0}});
    base.push_back(compute_node{std::vector<ext_int>(points.size(), one), 0, 0, true, 0, 0, 0,
                                gate{gate::kind::const_one, 0, 0, 0}});
    for (compute_node& nb : base) nb.hash = sig_hash(nb.sig);
    for (const compute_node& nb : base) ctx.base_gates.push_back(nb.g);
    const std::size_t n_inputs = base.size();

    compute_size_result res;
    circuit witness(n);
    bool have_witness = false;

    for (std::size_t s = 0; s <= opt.max_size && !res.found; ++s) {
        if (s == 0) {
            for (const compute_node& nb : base) {
                if (nb.sig == ctx.target) {
                    res.found = true;
                    res.size = 0;
                    circuit c(n);
                    gate_id g0;
                    if (nb.g.op == gate::kind::var)
                        g0 = c.add_var(nb.g.var_index);
                    else if (nb.g.op == gate::kind::const_zero)
                        g0 = c.add_zero();
                    else
                        g0 = c.add_one();
                    c.set_outputs({g0});
                    witness = std::move(c);
                    have_witness = true;
                    break;
                }
            }
            continue;
        }
        ctx.target_size = s;
        ctx.found.store(false);
        exec ex = opt.ex;
#ifndef _OPENMP
        ex = exec::serial;
#endif
        bool hit = false;
        if (ex == exec::openmp) {
#ifdef _OPENMP
            std::vector<std::tuple<int, std::size_t, std::size_t>> first;
            for (std::size_t a = 0; a < base.size(); ++a)
                for (std::size_t b = a; b < base.size(); ++b)
                    for (int op = 0; op < 2; ++op) first.emplace_back(op, a, b);
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(first.size()); ++i) {
                if (ctx.found.load(std::memory_order_relaxed)) continue;
                auto [op, a, b] = first[i];
                if (ctx.multilinear_only && op == 1 && (base[a].support & base[b].support))
                    continue;
                std::vector<compute_node> nodes = base;
                std::vector<ext_int> sig = combine(ctx, op, nodes[a].sig, nodes[b].sig);
                std::uint64_t h = sig_hash(sig);
                if (s == 1) {
                    if (h == ctx.target_hash && sig == ctx.target) {
                        bool expected = false;
                        if (ctx.found.compare_exchange_strong(expected, true))
                            record_witness(ctx, nodes, n_inputs, a, b, op, n);
                    }
                    continue;
                }
                bool dup = false;
                for (const compute_node& nn : nodes)
                    if (nn.hash == h && nn.sig == sig) dup = true;
                if (dup) continue;
                nodes.push_back(compute_node{std::move(sig), h,
                                             base[a].support | base[b].support, false, op,
                                             static_cast<gate_id>(a), static_cast<gate_id>(b),
                                             gate{}});
                compute_dfs(ctx, nodes, 1, n_inputs, n);
            }
            hit = ctx.found.load();
#endif
        }
        if (ex == exec::serial) {
            std::vector<compute_node> nodes = base;
            hit = compute_dfs(ctx, nodes, 0, n_inputs, n);
        }
        res.states += ctx.states.load();
        if (hit) {
            res.found = true;
            res.size = s;
            witness = ctx.witness;
            have_witness = true;
        }
    }

    if (!res.found) return res;

    // Canonical cross-check: when a complete canonical form exists, grid
    // agreement is provably equivalence, and the size is exact.
    res.domain_relative = true;
    if (have_witness) {
        try {
            polynomial produced = witness.produce_single();
            polynomial cf = canonical_form(f, id);
            polynomial cw = canonical_form(produced, id);
            if (cf.set_equal(cw)) {
                res.domain_relative = false;
                res.canonical_size = res.size;
            }
        } catch (const error&) {
            // no canonical form for this target; the grid caveat stands
        }
    }
    return res;
}

compute_size_result min_compute_size(const polynomial& f, semiring_id id, const options& opt) {
    return min_compute_size(f, id, oracle_domain(id), opt);
}

verify_report verify_certificate(const polynomial& f, const certificate& cert,
                                 const options& opt) {
    verify_report rep;
    rep.cert_value = cert.value;
    if (f.n_vars() > 4) {
        rep.note = "not oracle-checkable: more than 4 variables";
        return rep;
    }
    try {
        switch (cert.applies_to) {
            case measure::produce_size: {
                produce_size_result r = min_produce_size(f, opt);
                if (!r.found) {
                    rep.note = "not oracle-checkable: exceeds the size cap";
                    return rep;
                }
                rep.oracle_value = r.size;
                break;
            }
            case measure::min_size:
            case measure::max_size:
            case measure::mult_bool_size: {
                semiring_id id = cert.applies_to == measure::min_size ? semiring_id::min_nat
                                 : cert.applies_to == measure::max_size ? semiring_id::max_nat
                                                                        : semiring_id::boolean;
                compute_size_result r = min_compute_size(
                    f, id, oracle_domain(id), opt,
                    cert.applies_to == measure::mult_bool_size);
                if (!r.found) {
                    rep.note = "not oracle-checkable: exceeds the size cap";
                    return rep;
                }
                rep.oracle_value = r.size;
                if (r.domain_relative) rep.note = "oracle value relative to the finite domain";
                break;
            }
            case measure::depth: {
                rep.note = "not oracle-checkable: depth measure";
                return rep;
            }
        }
    } catch (const error& e) {
        rep.note = std::string("not oracle-checkable: ") + e.what();
        return rep;
    }
    rep.checkable = true;
    rep.slack = static_cast<std::int64_t>(rep.oracle_value) -
                static_cast<std::int64_t>(rep.cert_value);
    rep.ok = rep.slack >= 0;
    return rep;
}

}  // namespace oracle
}  // namespace tropcirc
