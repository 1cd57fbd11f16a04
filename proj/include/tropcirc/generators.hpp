#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropcirc/circuit.hpp"
#include "tropcirc/polynomial.hpp"

namespace tropcirc {

/// A simple undirected graph on nodes {0, ..., n-1}; no loops, no duplicate
/// edges, edges stored as sorted (u < v) pairs in lexicographic order.
struct graph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    graph() = default;
    graph(std::uint32_t n_, std::vector<std::pair<std::uint32_t, std::uint32_t>> e);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t max_degree() const;
    bool connected() const;
};

struct poly_family {
    std::string name;
    std::vector<std::pair<std::string, polynomial>> members;
};

// Variable indexing conventions (documented in the README):
//  * bipartite K_{n,n}: row-major, var(i,j) = i*n + j           (perm)
//  * K_n undirected edges: lexicographic over pairs i < j       (hc, clique,
//    stconn, conn, the DP circuits)
//  * rooted functional edges (i, j), i in {1..n-1}, j != i      (st)
//  * layered graph: transitions in layer order, row-major       (layered)
//  * triangle family: blocks x | y | z of n*n each
//  * mp: block x | y of n*n each

var_t knn_var(std::uint32_t n, std::uint32_t i, std::uint32_t j);
var_t kn_edge_var(std::uint32_t n, std::uint32_t u, std::uint32_t v);
std::uint32_t kn_edge_count(std::uint32_t n);

/// All perfect matchings of K_{n,n}: n! monomials of degree n. 2 <= n <= 7.
polynomial gen_perm(std::uint32_t n);
/// All Hamiltonian cycles of K_n: (n-1)!/2 monomials of degree n. 3 <= n <= 8.
polynomial gen_hc(std::uint32_t n);
/// All k-cliques of K_n: C(n,k) monomials of degree C(k,2). 2 <= k <= n <= 10.
polynomial gen_clique(std::uint32_t n, std::uint32_t k);
/// Functional spanning trees of K_n rooted in node 0: n^(n-2) monomials of
/// degree n-1 over directed edge variables. 3 <= n <= 7.
polynomial gen_spanning_tree(std::uint32_t n);
/// Simple paths from node 0 to node n-1 in K_n. n <= 8.
polynomial gen_stconn(std::uint32_t n);
/// Simple paths between s and t in K_n (shared edge-variable universe).
polynomial gen_stconn_pair(std::uint32_t n, std::uint32_t s, std::uint32_t t);
/// s-t paths in the layered graph with d+1 layers of widths 1, n, ..., n, 1:
/// n^(d-1) monomials of degree d. Requires n^(d-1) within the cap.
polynomial gen_layered_stconn(std::uint32_t n, std::uint32_t d,
                              std::size_t cap = default_term_cap);
/// sum_{i,j,k} x_ik y_kj z_ij over 3n^2 variables: n^3 monomials. n <= 6.
polynomial gen_triangle(std::uint32_t n);
/// The n^2 bilinear forms f_ij = sum_k x_ik y_kj. n <= 6.
poly_family gen_mp(std::uint32_t n);
/// Product of the path polynomials over all node pairs, fully expanded. n <= 4.
polynomial gen_conn(std::uint32_t n);
/// Monomials prod_{i in S} x_i over all S inducing an odd edge count. n <= 16.
polynomial gen_fG(const graph& g);

/// All-pairs lightest-walk circuit: outputs f_{ij}^(n) for i < j over the
/// undirected edge variables of K_n; exactly n(n-1)(n-2) gates. 2 <= n <= 32.
circuit build_floyd_warshall(std::uint32_t n);
/// Expected gate count of build_floyd_warshall(n), kept as a regression pin.
std::size_t floyd_warshall_gate_count(std::uint32_t n);
/// Single-output lightest-walk circuit for node 0 -> n-1 with at most n-1
/// edges. 2 <= n <= 32.
circuit build_bellman_ford(std::uint32_t n);
/// Sum of per-monomial product chains producing exactly f (same coefficients).
circuit build_naive(const polynomial& f, std::size_t cap = default_term_cap);

graph random_graph(std::uint32_t n, double p, std::uint64_t seed);
polynomial random_polynomial(std::uint32_t n_vars, std::size_t terms, exp_t max_deg,
                             std::uint64_t seed);
polynomial random_multilinear_polynomial(std::uint32_t n_vars, std::size_t terms,
                                         std::uint64_t seed);

struct random_circuit_options {
    std::uint32_t n_vars = 4;
    std::size_t gates = 10;
    double product_bias = 0.5;   // probability that a gate is a product
    double constant_prob = 0.1;  // probability of seeding a constant input
    bool allow_zero = true;
};
/// Deterministic random circuit with the last gate as the single output.
circuit random_circuit(const random_circuit_options& opt, std::uint64_t seed);

}  // namespace tropcirc
