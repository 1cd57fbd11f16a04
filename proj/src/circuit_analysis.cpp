#include "tropcirc/circuit_analysis.hpp"

#include <algorithm>
#include <unordered_map>

namespace tropcirc {

namespace {

std::vector<std::vector<gate_id>> successors(const circuit& c) {
    std::vector<std::vector<gate_id>> succ(c.node_count());
    for (gate_id i = 0; i < c.node_count(); ++i) {
        const gate& g = c.gates()[i];
        if (g.is_op()) {
            succ[g.lhs].push_back(i);
            succ[g.rhs].push_back(i);
        }
    }
    return succ;
}

std::vector<bool> reaches_output(const circuit& c) {
    std::vector<bool> r(c.node_count(), false);
    r[c.outputs().front()] = true;
    for (gate_id i = c.node_count(); i-- > 0;) {
        const gate& g = c.gates()[i];
        if (g.is_op() && r[i] == false) continue;
        if (g.is_op()) {
            r[g.lhs] = true;
            r[g.rhs] = true;
        }
    }
    return r;
}

}  // namespace

std::vector<polynomial> ext_all_gates(const circuit& c, std::size_t term_cap) {
    c.require_single_output();
    const gate_id out = c.outputs().front();
    std::vector<polynomial> prod = c.produce_all_gates(term_cap);
    std::vector<polynomial> ext(c.node_count(), polynomial(c.n_vars()));
    // Contributions to ext(v) come only from gates after v, so one reverse
    // sweep suffices.
    for (gate_id v = c.node_count(); v-- > 0;) {
        if (v == out) ext[v] = ext[v].plus(polynomial::unit(c.n_vars()));
        const gate& g = c.gates()[v];
        if (!g.is_op() || ext[v].empty()) continue;
        if (g.op == gate::kind::sum) {
            ext[g.lhs] = ext[g.lhs].plus(ext[v]);
            ext[g.rhs] = ext[g.rhs].plus(ext[v]);
        } else {
            ext[g.lhs] = ext[g.lhs].plus(prod[g.rhs].times(ext[v], term_cap));
            ext[g.rhs] = ext[g.rhs].plus(prod[g.lhs].times(ext[v], term_cap));
        }
        require(ext[g.lhs].term_count() <= term_cap && ext[g.rhs].term_count() <= term_cap,
                errc::cap, "ext polynomial cap exceeded");
    }
    return ext;
}

polynomial ext_polynomial(const circuit& c, gate_id g, std::size_t term_cap) {
    require(g < c.node_count(), errc::range, "gate id out of range");
    return ext_all_gates(c, term_cap)[g];
}

polynomial edge_ext(const circuit& c, gate_id u, gate_id v, std::size_t term_cap) {
    require(v < c.node_count(), errc::range, "gate id out of range");
    const gate& gv = c.gates()[v];
    require(gv.is_op() && (gv.lhs == u || gv.rhs == u), errc::precondition,
            "(u,v) is not a wire");
    std::vector<polynomial> ext = ext_all_gates(c, term_cap);
    if (gv.op == gate::kind::sum) return ext[v];
    gate_id other = (gv.lhs == u) ? gv.rhs : gv.lhs;
    return c.produce_all_gates(term_cap)[other].times(ext[v], term_cap);
}

bool is_node_cut(const circuit& c, const std::vector<gate_id>& nodes) {
    c.require_single_output();
    const gate_id out = c.outputs().front();
    std::vector<bool> in_cut(c.node_count(), false);
    for (gate_id u : nodes) {
        require(u < c.node_count(), errc::range, "cut node out of range");
        in_cut[u] = true;
    }
    std::vector<bool> reach = reaches_output(c);
    std::vector<std::vector<gate_id>> succ = successors(c);
    // blocked[v]: every v -> output path meets the cut.
    std::vector<bool> blocked(c.node_count(), false);
    for (gate_id v = c.node_count(); v-- > 0;) {
        if (!reach[v]) continue;
        if (in_cut[v]) {
            blocked[v] = true;
            continue;
        }
        if (v == out) continue;  // the single-node path misses the cut
        bool all = true;
        bool any = false;
        for (gate_id w : succ[v]) {
            if (!reach[w]) continue;
            any = true;
            all = all && blocked[w];
        }
        blocked[v] = any && all;
    }
    for (gate_id v = 0; v < c.node_count(); ++v)
        if (reach[v] && c.gates()[v].is_input() && !blocked[v]) return false;
    return true;
}

bool is_edge_cut(const circuit& c, const std::vector<edge_ref>& edges) {
    c.require_single_output();
    const gate_id out = c.outputs().front();
    auto edge_key = [&](gate_id a, gate_id b) {
        return static_cast<std::uint64_t>(a) << 32 | b;
    };
    std::unordered_map<std::uint64_t, bool> in_cut;
    for (const edge_ref& e : edges) {
        const gate& gv = c.gates().at(e.to);
        require(gv.is_op() && (gv.lhs == e.from || gv.rhs == e.from), errc::precondition,
                "cut contains a non-wire");
        in_cut[edge_key(e.from, e.to)] = true;
    }
    std::vector<bool> reach = reaches_output(c);
    std::vector<std::vector<gate_id>> succ = successors(c);
    std::vector<bool> blocked(c.node_count(), false);
    for (gate_id v = c.node_count(); v-- > 0;) {
        if (!reach[v] || v == out) continue;
        bool all = true;
        bool any = false;
        for (gate_id w : succ[v]) {
            if (!reach[w]) continue;
            any = true;
            all = all && (in_cut.count(edge_key(v, w)) || blocked[w]);
        }
        blocked[v] = any && all;
    }
    if (c.gates()[out].is_input()) return false;  // a single-node path has no edges
    for (gate_id v = 0; v < c.node_count(); ++v)
        if (reach[v] && c.gates()[v].is_input() && !blocked[v]) return false;
    return true;
}

gate_split split_at_gate(const circuit& c, gate_id g, std::size_t term_cap) {
    require(g < c.node_count(), errc::range, "gate id out of range");
    gate_split s{c.produce_all_gates(term_cap)[g], ext_polynomial(c, g, term_cap),
                 c.restrict_gate_zero(g).produce_single(term_cap)};
    return s;
}

std::vector<std::pair<polynomial, polynomial>> cut_decompose(
    const circuit& c, const std::vector<gate_id>& node_cut, std::size_t term_cap) {
    require(is_node_cut(c, node_cut), errc::precondition, "not a node cut");
    std::vector<polynomial> prod = c.produce_all_gates(term_cap);
    std::vector<polynomial> ext = ext_all_gates(c, term_cap);
    std::vector<std::pair<polynomial, polynomial>> parts;
    parts.reserve(node_cut.size());
    for (gate_id u : node_cut) parts.emplace_back(prod[u], ext[u]);
    return parts;
}

std::vector<std::pair<polynomial, polynomial>> cut_decompose(
    const circuit& c, const std::vector<edge_ref>& edge_cut, std::size_t term_cap) {
    require(is_edge_cut(c, edge_cut), errc::precondition, "not an edge cut");
    std::vector<polynomial> prod = c.produce_all_gates(term_cap);
    std::vector<polynomial> ext = ext_all_gates(c, term_cap);
    std::vector<std::pair<polynomial, polynomial>> parts;
    parts.reserve(edge_cut.size());
    for (const edge_ref& e : edge_cut) {
        const gate& gv = c.gates()[e.to];
        if (gv.op == gate::kind::sum) {
            parts.emplace_back(prod[e.from], ext[e.to]);
        } else {
            gate_id other = (gv.lhs == e.from) ? gv.rhs : gv.lhs;
            parts.emplace_back(prod[e.from], prod[other].times(ext[e.to], term_cap));
        }
    }
    return parts;
}

circuit envelope_subcircuit(const circuit& c, envelope_kind which) {
    c.require_single_output();
    const bool lower = which == envelope_kind::lower;
    std::vector<ext_int> deg = lower ? c.gate_min_degrees() : c.gate_max_degrees();
    auto empty_at = [&](gate_id i) {
        return lower ? deg[i].is_pos_inf() : deg[i].is_neg_inf();
    };
    require(!empty_at(c.outputs().front()), errc::precondition,
            "envelope of an empty polynomial");

    circuit out(c.n_vars());
    std::unordered_map<gate_id, gate_id> memo;
    std::optional<gate_id> zero_node;
    auto zero = [&]() {
        if (!zero_node) zero_node = out.add_zero();
        return *zero_node;
    };
    auto rec = [&](auto&& self, gate_id i) -> gate_id {
        auto it = memo.find(i);
        if (it != memo.end()) return it->second;
        const gate& g = c.gates()[i];
        gate_id r;
        switch (g.op) {
            case gate::kind::var: r = out.add_var(g.var_index); break;
            case gate::kind::const_zero: r = zero(); break;
            case gate::kind::const_one: r = out.add_one(); break;
            case gate::kind::prod: {
                gate_id l = self(self, g.lhs);
                gate_id rr = self(self, g.rhs);
                r = out.add_prod(l, rr);
                break;
            }
            case gate::kind::sum: {
                const ext_int dl = deg[g.lhs];
                const ext_int dr = deg[g.rhs];
                bool keep_l = false, keep_r = false;
                if (empty_at(g.lhs) && empty_at(g.rhs)) {
                    r = zero();
                    break;
                } else if (empty_at(g.lhs)) {
                    keep_l = false, keep_r = true;
                } else if (empty_at(g.rhs)) {
                    keep_l = true, keep_r = false;
                } else if (dl == dr) {
                    keep_l = keep_r = true;
                } else if (lower ? dl < dr : dr < dl) {
                    keep_l = true, keep_r = false;
                } else {
                    keep_l = false, keep_r = true;
                }
                if (keep_l && keep_r) {
                    gate_id l = self(self, g.lhs);
                    gate_id rr = self(self, g.rhs);
                    r = out.add_sum(l, rr);
                } else {
                    r = self(self, keep_l ? g.lhs : g.rhs);
                }
                break;
            }
            default: fail(errc::internal, "bad gate kind");
        }
        memo.emplace(i, r);
        return r;
    };
    gate_id root = rec(rec, c.outputs().front());
    out.set_outputs({root});
    return out;
}

namespace {

// Measure per gate: minimum produced degree (structural) or minimum produced
// length (from the produced polynomials). +inf marks the empty polynomial.
std::vector<ext_int> gate_measures(const circuit& c, degree_measure measure,
                                   std::size_t term_cap) {
    if (measure == degree_measure::degree) return c.gate_min_degrees();
    std::vector<polynomial> prod = c.produce_all_gates(term_cap);
    std::vector<ext_int> m(c.node_count());
    for (gate_id i = 0; i < c.node_count(); ++i) m[i] = prod[i].min_length();
    return m;
}

}  // namespace

gate_id find_balanced_product_gate(const circuit& c, std::uint64_t m, degree_measure measure,
                                   std::size_t term_cap) {
    c.require_single_output();
    require(m >= 3, errc::precondition, "balanced search needs measure at least 3");
    std::vector<ext_int> deg = gate_measures(c, measure, term_cap);
    const gate_id out = c.outputs().front();
    require(deg[out].is_finite() && static_cast<std::uint64_t>(deg[out].value()) >= m,
            errc::precondition, "output measure below m");

    // above(x): 3x > 2m, i.e. x is above the window.
    auto above = [&](const ext_int& x) {
        return x.is_pos_inf() || 3 * static_cast<std::uint64_t>(x.value()) > 2 * m;
    };
    auto finite_of = [&](gate_id a, gate_id b) {
        // larger finite measure, left on ties
        if (!deg[a].is_finite()) return b;
        if (!deg[b].is_finite()) return a;
        return deg[b] > deg[a] ? b : a;
    };

    gate_id cur = out;
    gate_id stop_gate = UINT32_MAX;
    while (true) {
        const gate& g = c.gates()[cur];
        require(g.is_op(), errc::internal, "balanced walk reached an input node");
        if (g.op == gate::kind::sum) {
            cur = finite_of(g.lhs, g.rhs);
            continue;
        }
        if (!above(deg[g.lhs]) && !above(deg[g.rhs])) {
            stop_gate = cur;
            break;
        }
        cur = finite_of(g.lhs, g.rhs);
    }

    const gate& v = c.gates()[stop_gate];
    gate_id u = deg[v.rhs] > deg[v.lhs] ? v.rhs : v.lhs;
    // Descend through sum gates of equal measure until a product gate.
    while (c.gates()[u].op == gate::kind::sum) {
        const gate& gu = c.gates()[u];
        u = (deg[gu.lhs] == deg[u]) ? gu.lhs : gu.rhs;
    }
    require(c.gates()[u].op == gate::kind::prod, errc::internal,
            "balanced walk did not end at a product gate");
    std::uint64_t du = static_cast<std::uint64_t>(deg[u].value());
    require(3 * du > m && 3 * du <= 2 * m, errc::internal, "balanced gate outside the window");
    return u;
}

std::vector<sop_part> sum_of_products_decompose(const circuit& c, degree_measure measure,
                                                std::size_t term_cap) {
    c.require_single_output();
    polynomial target = c.produce_single(term_cap);
    require(!target.empty(), errc::precondition, "decomposition of an empty polynomial");
    ext_int m0 = measure == degree_measure::degree ? target.min_degree() : target.min_length();
    std::uint64_t m = static_cast<std::uint64_t>(m0.value());
    require(m >= 3, errc::precondition, "decomposition needs minimum measure at least 3");

    std::vector<sop_part> parts;
    circuit cur = c;
    std::size_t budget = c.product_gate_count();
    polynomial covered(c.n_vars());
    while (true) {
        polynomial rest = cur.produce_single(term_cap);
        if (rest.empty()) break;
        require(parts.size() < budget + 1, errc::internal,
                "more parts than product gates");
        gate_id g = find_balanced_product_gate(cur, m, measure, term_cap);
        std::vector<polynomial> prod = cur.produce_all_gates(term_cap);
        const gate& gg = cur.gates()[g];
        sop_part part{prod[g], prod[gg.lhs], prod[gg.rhs], ext_polynomial(cur, g, term_cap), g};
        require(!part.a_left.empty() && !part.a_right.empty(), errc::internal,
                "balanced gate with an empty input");
        covered = covered.plus(part.a.times(part.b, term_cap));
        parts.push_back(std::move(part));
        cur = cur.restrict_gate_zero(g);
    }
    require(parts.size() <= budget, errc::internal, "more parts than product gates");
    require(covered.set_equal(target), errc::internal,
            "sum-of-products parts do not cover the produced polynomial");
    return parts;
}

std::vector<parse_graph> parse_graphs(const circuit& c, std::size_t limit) {
    c.require_single_output();
    // Saturating count first, so an oversized enumeration fails fast.
    const std::uint64_t sat = static_cast<std::uint64_t>(limit) + 1;
    std::vector<std::uint64_t> count(c.node_count(), 0);
    for (gate_id i = 0; i < c.node_count(); ++i) {
        const gate& g = c.gates()[i];
        switch (g.op) {
            case gate::kind::var:
            case gate::kind::const_one: count[i] = 1; break;
            case gate::kind::const_zero: count[i] = 0; break;
            case gate::kind::sum: count[i] = std::min(sat, count[g.lhs] + count[g.rhs]); break;
            case gate::kind::prod: {
                std::uint64_t r;
                if (__builtin_mul_overflow(count[g.lhs], count[g.rhs], &r)) r = sat;
                count[i] = std::min(sat, r);
                break;
            }
        }
    }
    require(count[c.outputs().front()] <= limit, errc::cap,
            "more than " + std::to_string(limit) + " parse graphs");

    std::vector<parse_graph> out;
    std::vector<std::pair<var_t, exp_t>> mono_acc;
    std::vector<std::pair<gate_id, int>> choices;
    std::vector<std::uint32_t> visits(c.node_count(), 0);
    bool tree_ok = true;

    // Pending gates to expand; products push both inputs.
    auto rec = [&](auto&& self, std::vector<gate_id>& stack) -> void {
        if (stack.empty()) {
            out.push_back(parse_graph{monomial(mono_acc), choices, tree_ok});
            return;
        }
        gate_id gid = stack.back();
        stack.pop_back();
        const gate& g = c.gates()[gid];
        bool prev_tree = tree_ok;
        visits[gid]++;
        if (visits[gid] > 1) tree_ok = false;
        switch (g.op) {
            case gate::kind::const_zero: break;  // dead branch, no parse
            case gate::kind::const_one: self(self, stack); break;
            case gate::kind::var:
                mono_acc.emplace_back(g.var_index, 1);
                self(self, stack);
                mono_acc.pop_back();
                break;
            case gate::kind::sum:
                for (int side = 0; side < 2; ++side) {
                    choices.emplace_back(gid, side);
                    stack.push_back(side == 0 ? g.lhs : g.rhs);
                    self(self, stack);
                    stack.pop_back();
                    choices.pop_back();
                }
                break;
            case gate::kind::prod:
                stack.push_back(g.rhs);
                stack.push_back(g.lhs);
                self(self, stack);
                stack.pop_back();
                stack.pop_back();
                break;
        }
        visits[gid]--;
        tree_ok = prev_tree;
        stack.push_back(gid);
    };
    std::vector<gate_id> stack{c.outputs().front()};
    rec(rec, stack);
    return out;
}

multilinearity_report multilinearity_check(const circuit& c, std::size_t term_cap) {
    c.require_single_output();
    multilinearity_report rep;
    rep.structurally_multilinear = c.is_multilinear_circuit();
    if (rep.structurally_multilinear) return rep;
    std::vector<ext_int> mind = c.gate_min_degrees();
    std::vector<std::vector<bool>> supp = c.gate_supports();
    std::vector<polynomial> ext = ext_all_gates(c, term_cap);
    for (gate_id i = 0; i < c.node_count(); ++i) {
        const gate& g = c.gates()[i];
        if (g.op != gate::kind::prod || mind[i].is_pos_inf()) continue;
        bool overlap = false;
        for (var_t v = 0; v < c.n_vars() && !overlap; ++v)
            overlap = supp[g.lhs][v] && supp[g.rhs][v];
        if (overlap) {
            rep.overlapping_product_gates.push_back(i);
            rep.inert.push_back(ext[i].empty());
        }
    }
    return rep;
}

}  // namespace tropcirc
