#include "tropcirc/circuit.hpp"

#include <algorithm>

namespace tropcirc {

std::size_t circuit::size() const {
    std::size_t s = 0;
    for (const gate& g : gates_) s += g.is_op();
    return s;
}

std::size_t circuit::product_gate_count() const {
    std::size_t s = 0;
    for (const gate& g : gates_) s += g.op == gate::kind::prod;
    return s;
}

std::size_t circuit::depth() const {
    std::vector<std::size_t> d(gates_.size(), 0);
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        if (g.is_op()) d[i] = 1 + std::max(d[g.lhs], d[g.rhs]);
    }
    std::size_t best = 0;
    for (gate_id o : outputs_) best = std::max(best, d[o]);
    return best;
}

gate_id circuit::push(gate g) {
    require(gates_.size() < UINT32_MAX, errc::cap, "circuit too large");
    gates_.push_back(g);
    return static_cast<gate_id>(gates_.size() - 1);
}

gate_id circuit::add_var(var_t i) {
    require(i < n_vars_, errc::range, "variable index out of universe");
    return push(gate{gate::kind::var, i, 0, 0});
}

gate_id circuit::add_zero() { return push(gate{gate::kind::const_zero, 0, 0, 0}); }
gate_id circuit::add_one() { return push(gate{gate::kind::const_one, 0, 0, 0}); }

gate_id circuit::add_sum(gate_id a, gate_id b) {
    require(a < gates_.size() && b < gates_.size(), errc::range, "gate operand out of range");
    return push(gate{gate::kind::sum, 0, a, b});
}

gate_id circuit::add_prod(gate_id a, gate_id b) {
    require(a < gates_.size() && b < gates_.size(), errc::range, "gate operand out of range");
    return push(gate{gate::kind::prod, 0, a, b});
}

void circuit::set_outputs(std::vector<gate_id> outs) { outputs_ = std::move(outs); }

std::vector<std::string> circuit::validate() const {
    std::vector<std::string> bad;
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        if (g.op == gate::kind::var && g.var_index >= n_vars_)
            bad.push_back("gate " + std::to_string(i) + ": variable outside the universe");
        if (g.is_op() && (g.lhs >= i || g.rhs >= i))
            bad.push_back("gate " + std::to_string(i) + ": operand not earlier in the list");
    }
    if (outputs_.empty()) bad.push_back("outputs list is empty");
    for (gate_id o : outputs_)
        if (o >= gates_.size()) bad.push_back("output id " + std::to_string(o) + " out of range");
    return bad;
}

void circuit::require_valid() const {
    auto bad = validate();
    require(bad.empty(), errc::precondition, bad.empty() ? "" : "invalid circuit: " + bad.front());
}

void circuit::require_single_output() const {
    require_valid();
    require(outputs_.size() == 1, errc::precondition, "operation requires a single output");
}

std::vector<ext_int> circuit::eval_all_gates(semiring_id id,
                                             const std::vector<ext_int>& assignment) const {
    require_valid();
    require(assignment.size() == n_vars_, errc::precondition,
            "assignment length differs from the variable universe");
    for (const ext_int& x : assignment) require_carrier(id, x);
    const auto [zero, one] = sr_constants(id);
    std::vector<ext_int> val(gates_.size());
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        switch (g.op) {
            case gate::kind::var: val[i] = assignment[g.var_index]; break;
            case gate::kind::const_zero: val[i] = zero; break;
            case gate::kind::const_one: val[i] = one; break;
            case gate::kind::sum: val[i] = sr_add(id, val[g.lhs], val[g.rhs]); break;
            case gate::kind::prod: val[i] = sr_mul(id, val[g.lhs], val[g.rhs]); break;
        }
    }
    return val;
}

std::vector<ext_int> circuit::eval(semiring_id id, const std::vector<ext_int>& assignment) const {
    std::vector<ext_int> val = eval_all_gates(id, assignment);
    std::vector<ext_int> out;
    out.reserve(outputs_.size());
    for (gate_id o : outputs_) out.push_back(val[o]);
    return out;
}

std::vector<polynomial> circuit::produce_all_gates(std::size_t term_cap) const {
    require_valid();
    std::vector<polynomial> poly(gates_.size(), polynomial(n_vars_));
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        switch (g.op) {
            case gate::kind::var: poly[i] = polynomial::variable(n_vars_, g.var_index); break;
            case gate::kind::const_zero: poly[i] = polynomial::zero(n_vars_); break;
            case gate::kind::const_one: poly[i] = polynomial::unit(n_vars_); break;
            case gate::kind::sum: poly[i] = poly[g.lhs].plus(poly[g.rhs]); break;
            case gate::kind::prod: {
                try {
                    poly[i] = poly[g.lhs].times(poly[g.rhs], term_cap);
                } catch (const error& e) {
                    if (e.kind() != errc::cap) throw;
                    fail(errc::cap, "production cap exceeded at gate " + std::to_string(i) + ": " +
                                        e.what());
                }
                break;
            }
        }
        require(poly[i].term_count() <= term_cap, errc::cap,
                "production cap exceeded at gate " + std::to_string(i));
    }
    return poly;
}

std::vector<polynomial> circuit::produce(std::size_t term_cap) const {
    std::vector<polynomial> poly = produce_all_gates(term_cap);
    std::vector<polynomial> out;
    out.reserve(outputs_.size());
    for (gate_id o : outputs_) out.push_back(poly[o]);
    return out;
}

polynomial circuit::produce_single(std::size_t term_cap) const {
    require_single_output();
    return produce(term_cap).front();
}

std::vector<ext_int> circuit::gate_min_degrees() const {
    std::vector<ext_int> d(gates_.size());
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        switch (g.op) {
            case gate::kind::var: d[i] = ext_int(1); break;
            case gate::kind::const_zero: d[i] = ext_int::pos_inf(); break;
            case gate::kind::const_one: d[i] = ext_int(0); break;
            case gate::kind::sum: d[i] = min(d[g.lhs], d[g.rhs]); break;
            case gate::kind::prod: d[i] = d[g.lhs].checked_plus(d[g.rhs]); break;
        }
    }
    return d;
}

std::vector<ext_int> circuit::gate_max_degrees() const {
    std::vector<ext_int> d(gates_.size());
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        switch (g.op) {
            case gate::kind::var: d[i] = ext_int(1); break;
            case gate::kind::const_zero: d[i] = ext_int::neg_inf(); break;
            case gate::kind::const_one: d[i] = ext_int(0); break;
            case gate::kind::sum: d[i] = max(d[g.lhs], d[g.rhs]); break;
            case gate::kind::prod:
                // -inf marks an empty side and absorbs the product.
                if (d[g.lhs].is_neg_inf() || d[g.rhs].is_neg_inf())
                    d[i] = ext_int::neg_inf();
                else
                    d[i] = d[g.lhs].checked_plus(d[g.rhs]);
                break;
        }
    }
    return d;
}

std::vector<std::vector<bool>> circuit::gate_supports() const {
    std::vector<ext_int> mind = gate_min_degrees();
    std::vector<std::vector<bool>> supp(gates_.size(), std::vector<bool>(n_vars_, false));
    auto empty_poly = [&](gate_id i) { return mind[i].is_pos_inf(); };
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        if (empty_poly(i)) continue;
        switch (g.op) {
            case gate::kind::var: supp[i][g.var_index] = true; break;
            case gate::kind::const_zero:
            case gate::kind::const_one: break;
            case gate::kind::sum:
                for (var_t v = 0; v < n_vars_; ++v)
                    supp[i][v] = (!empty_poly(g.lhs) && supp[g.lhs][v]) ||
                                 (!empty_poly(g.rhs) && supp[g.rhs][v]);
                break;
            case gate::kind::prod:
                for (var_t v = 0; v < n_vars_; ++v)
                    supp[i][v] = supp[g.lhs][v] || supp[g.rhs][v];
                break;
        }
    }
    return supp;
}

bool circuit::is_multilinear_circuit() const {
    std::vector<ext_int> mind = gate_min_degrees();
    std::vector<std::vector<bool>> supp = gate_supports();
    for (gate_id i = 0; i < gates_.size(); ++i) {
        const gate& g = gates_[i];
        if (g.op != gate::kind::prod) continue;
        if (mind[i].is_pos_inf()) continue;  // empty product, vacuously fine
        for (var_t v = 0; v < n_vars_; ++v)
            if (supp[g.lhs][v] && supp[g.rhs][v]) return false;
    }
    return true;
}

bool circuit::is_homogeneous_circuit() const {
    std::vector<ext_int> lo = gate_min_degrees();
    std::vector<ext_int> hi = gate_max_degrees();
    for (gate_id i = 0; i < gates_.size(); ++i) {
        if (lo[i].is_pos_inf()) continue;  // empty polynomial
        if (lo[i] != hi[i]) return false;
    }
    return true;
}

circuit circuit::restrict_gate_zero(gate_id g) const {
    require(g < gates_.size(), errc::range, "gate id out of range");
    circuit c = *this;
    c.gates_[g] = gate{gate::kind::const_zero, 0, 0, 0};
    return c;
}

bool circuit::is_redundant_gate(gate_id g, std::size_t term_cap) const {
    require_single_output();
    polynomial before = produce_single(term_cap);
    polynomial after = restrict_gate_zero(g).produce_single(term_cap);
    return before.set_equal(after);
}

}  // namespace tropcirc
