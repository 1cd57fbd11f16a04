#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcirc/polynomial.hpp"

namespace tropcirc {

using gate_id = std::uint32_t;

/// One node of a fanin-2 circuit: a variable, a semiring constant, or a
/// binary sum/product gate over earlier nodes.
struct gate {
    enum class kind : std::uint8_t { var, const_zero, const_one, sum, prod };

    kind op;
    var_t var_index = 0;  // for kind::var
    gate_id lhs = 0;      // for sum/prod
    gate_id rhs = 0;

    bool is_input() const { return op != kind::sum && op != kind::prod; }
    bool is_op() const { return !is_input(); }
};

/// A fanin-2 circuit over {x_0..x_{n-1}, 0, 1} as a gate list in topological
/// order, with one or more designated outputs. Immutable in practice: all
/// analyses return fresh values.
class circuit {
  public:
    explicit circuit(std::uint32_t n_vars = 0) : n_vars_(n_vars) {}

    std::uint32_t n_vars() const { return n_vars_; }
    const std::vector<gate>& gates() const { return gates_; }
    const std::vector<gate_id>& outputs() const { return outputs_; }
    std::size_t node_count() const { return gates_.size(); }

    /// Number of sum/product gates (input nodes do not count).
    std::size_t size() const;
    std::size_t product_gate_count() const;

    /// Largest number of edges on a path from an input node to an output.
    std::size_t depth() const;

    // Builder interface; returns the id of the new node.
    gate_id add_var(var_t i);
    gate_id add_zero();
    gate_id add_one();
    gate_id add_sum(gate_id a, gate_id b);
    gate_id add_prod(gate_id a, gate_id b);
    void set_outputs(std::vector<gate_id> outs);

    /// Structural well-formedness: id ranges, topological references,
    /// nonempty valid outputs. Returns the list of violations.
    std::vector<std::string> validate() const;
    void require_valid() const;
    void require_single_output() const;

    /// Evaluates every gate over the semiring; one value per output.
    std::vector<ext_int> eval(semiring_id id, const std::vector<ext_int>& assignment) const;
    /// All gate values, for analyses that look inside.
    std::vector<ext_int> eval_all_gates(semiring_id id,
                                        const std::vector<ext_int>& assignment) const;

    /// Formal polynomial per gate (semiring-independent), memoized bottom-up.
    /// Every gate's term count is capped; on explosion the error names the gate.
    std::vector<polynomial> produce_all_gates(std::size_t term_cap = default_term_cap) const;
    /// Formal polynomial per output.
    std::vector<polynomial> produce(std::size_t term_cap = default_term_cap) const;
    /// Single-output convenience.
    polynomial produce_single(std::size_t term_cap = default_term_cap) const;

    /// Minimum produced degree per gate, without expansion: var -> 1,
    /// one -> 0, zero -> +inf, sum -> min, prod -> sum (+inf absorbing).
    std::vector<ext_int> gate_min_degrees() const;
    /// Maximum produced degree per gate (-inf marks the empty polynomial).
    std::vector<ext_int> gate_max_degrees() const;

    /// Variable support of the produced polynomial per gate (empty for gates
    /// producing the empty polynomial), computed structurally.
    std::vector<std::vector<bool>> gate_supports() const;

    /// Product-gate inputs have disjoint produced supports everywhere.
    bool is_multilinear_circuit() const;
    /// Every gate's produced polynomial is homogeneous (or empty).
    bool is_homogeneous_circuit() const;

    /// Replaces gate g by the additive identity.
    circuit restrict_gate_zero(gate_id g) const;

    /// True iff the produced output polynomial is unchanged by zeroing g.
    bool is_redundant_gate(gate_id g, std::size_t term_cap = default_term_cap) const;

  private:
    gate_id push(gate g);

    std::uint32_t n_vars_;
    std::vector<gate> gates_;
    std::vector<gate_id> outputs_;
};

}  // namespace tropcirc
