#pragma once

#include <utility>
#include <vector>

#include "tropcirc/circuit.hpp"

namespace tropcirc {

// Structural decompositions of a single-output circuit. "Equality" of the
// polynomial identities below is always set equality of monomials.

/// ext(g): the sum, over all paths from g to the output, of the product of
/// the polynomials produced at the off-path inputs of the product gates on
/// the path. produce(g) * ext(g) is a sub-polynomial of the output.
polynomial ext_polynomial(const circuit& c, gate_id g, std::size_t term_cap = default_term_cap);

/// ext for every gate at once (gates that cannot reach the output get the
/// empty polynomial).
std::vector<polynomial> ext_all_gates(const circuit& c, std::size_t term_cap = default_term_cap);

/// ext along a wire (u,v): ext(v) for a sum gate v, produce(w) * ext(v) for
/// a product gate v = u * w.
polynomial edge_ext(const circuit& c, gate_id u, gate_id v,
                    std::size_t term_cap = default_term_cap);

struct edge_ref {
    gate_id from;
    gate_id to;
};

/// Every input-to-output path passes through a node of U (resp. an edge of E).
bool is_node_cut(const circuit& c, const std::vector<gate_id>& nodes);
bool is_edge_cut(const circuit& c, const std::vector<edge_ref>& edges);

/// The split F = produce(g)*ext(g) + F_{g=0} for one gate.
struct gate_split {
    polynomial factor;   // produce(g)
    polynomial ext;      // ext(g)
    polynomial rest;     // output polynomial of the circuit with g zeroed
};
gate_split split_at_gate(const circuit& c, gate_id g, std::size_t term_cap = default_term_cap);

/// Pairs (produce(u), ext(u)) over a node cut, or (produce(u), ext(v,u))
/// over an edge cut; the union of the pairwise products is the output
/// polynomial. Fails with errc::precondition when the cut property does not
/// hold.
std::vector<std::pair<polynomial, polynomial>> cut_decompose(
    const circuit& c, const std::vector<gate_id>& node_cut,
    std::size_t term_cap = default_term_cap);
std::vector<std::pair<polynomial, polynomial>> cut_decompose(
    const circuit& c, const std::vector<edge_ref>& edge_cut,
    std::size_t term_cap = default_term_cap);

enum class envelope_kind { lower, higher };

/// A circuit of size at most size(c) producing exactly the lower (resp.
/// higher) envelope of c's produced polynomial; the result is homogeneous.
circuit envelope_subcircuit(const circuit& c, envelope_kind which);

enum class degree_measure { degree, length };

/// A product gate whose measure (minimum produced degree, or minimum length)
/// lies in the window [ceil(m/3), floor(2m/3)], found by walking from the
/// output towards inputs of larger measure. Precondition: the output's
/// measure is at least m >= 3.
gate_id find_balanced_product_gate(const circuit& c, std::uint64_t m,
                                   degree_measure measure = degree_measure::degree,
                                   std::size_t term_cap = default_term_cap);

struct sop_part {
    polynomial a;        // produce(g), measure in the balanced window
    polynomial a_left;   // produce of g's left input (nonempty)
    polynomial a_right;  // produce of g's right input (nonempty)
    polynomial b;        // ext(g)
    gate_id g;
};

/// Peels balanced product gates until the output polynomial is exhausted.
/// The union of a*b over the parts equals the produced polynomial, and the
/// number of parts is at most the number of product gates.
std::vector<sop_part> sum_of_products_decompose(const circuit& c,
                                                degree_measure measure = degree_measure::degree,
                                                std::size_t term_cap = default_term_cap);

/// One parse of the circuit: a choice of one input per visited sum gate and
/// both inputs per visited product gate, yielding exactly one monomial.
/// `choices` records (sum gate, chosen side) in visit order; a gate may be
/// visited more than once when the circuit reconverges.
struct parse_graph {
    monomial produced;
    std::vector<std::pair<gate_id, int>> choices;
    bool is_tree;  // no node visited twice
};

/// Enumerates all parse graphs of a single-output circuit; errc::cap when
/// there are more than `limit`.
std::vector<parse_graph> parse_graphs(const circuit& c, std::size_t limit);

/// Product gates with overlapping input supports, together with whether each
/// one is inert (its ext polynomial is empty, so it cannot influence the
/// output). A circuit producing and computing a multilinear polynomial is
/// expected to be structurally multilinear once inert gates are discounted;
/// anything else is a counterexample candidate to be reported, not ignored.
struct multilinearity_report {
    bool structurally_multilinear;
    std::vector<gate_id> overlapping_product_gates;
    std::vector<bool> inert;  // parallel to overlapping_product_gates
};
multilinearity_report multilinearity_check(const circuit& c,
                                           std::size_t term_cap = default_term_cap);

}  // namespace tropcirc
