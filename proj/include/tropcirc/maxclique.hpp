#pragma once

#include <cstdint>
#include <vector>

namespace tropcirc {

/// Adjacency of an undirected graph on up to 64 vertices as bitmasks.
struct bitgraph {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] has bit w iff {v,w} is an edge

    explicit bitgraph(std::uint32_t n_ = 0) : n(n_), adj(n_, 0) {}
    void add_edge(std::uint32_t u, std::uint32_t v) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
/// Deterministic: ties resolve by vertex index. Returns the vertex set.
std::vector<std::uint32_t> max_clique_exact(const bitgraph& g);

/// Greedy clique in index order (valid, possibly smaller).
std::vector<std::uint32_t> max_clique_greedy(const bitgraph& g);

/// Exact maximum independent set (complement clique).
std::vector<std::uint32_t> max_independent_set_exact(const bitgraph& g);

}  // namespace tropcirc
