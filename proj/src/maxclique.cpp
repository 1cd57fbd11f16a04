#include "tropcirc/maxclique.hpp"

#include <algorithm>

#include "tropcirc/errors.hpp"

namespace tropcirc {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

struct searcher {
    const bitgraph& g;
    std::uint64_t best_set = 0;
    int best = 0;

    explicit searcher(const bitgraph& gg) : g(gg) {}

    // Greedy colouring upper bound on the clique number of the subgraph
    // induced by `cand`; classes are peeled as independent-ish sets.
    int colour_bound(std::uint64_t cand) const {
        int colours = 0;
        while (cand) {
            std::uint64_t cls = 0;
            std::uint64_t rest = cand;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if ((g.adj[v] & cls) == 0) {
                    cls |= 1ull << v;
                }
            }
            cand &= ~cls;
            colours++;
        }
        return colours;
    }

    void expand(std::uint64_t clique, int size, std::uint64_t cand) {
        if (size + popcount(cand) <= best) return;
        if (size + colour_bound(cand) <= best) return;
        if (!cand) {
            if (size > best) {
                best = size;
                best_set = clique;
            }
            return;
        }
        while (cand) {
            if (size + popcount(cand) <= best) return;
            int v = __builtin_ctzll(cand);
            cand &= ~(1ull << v);
            expand(clique | (1ull << v), size + 1, cand & g.adj[v]);
        }
    }
};

std::vector<std::uint32_t> unpack(std::uint64_t set) {
    std::vector<std::uint32_t> out;
    while (set) {
        out.push_back(static_cast<std::uint32_t>(__builtin_ctzll(set)));
        set &= set - 1;
    }
    return out;
}

}  // namespace

std::vector<std::uint32_t> max_clique_exact(const bitgraph& g) {
    require(g.n <= 64, errc::cap, "exact clique search limited to 64 vertices");
    if (g.n == 0) return {};
    searcher s(g);
    // Seed with the greedy solution so pruning bites early.
    std::uint64_t seed = 0;
    for (std::uint32_t v : max_clique_greedy(g)) seed |= 1ull << v;
    s.best = popcount(seed);
    s.best_set = seed;
    std::uint64_t all = (g.n == 64) ? ~0ull : ((1ull << g.n) - 1);
    s.expand(0, 0, all);
    return unpack(s.best_set);
}

std::vector<std::uint32_t> max_clique_greedy(const bitgraph& g) {
    require(g.n <= 64, errc::cap, "clique search limited to 64 vertices");
    std::uint64_t clique = 0;
    for (std::uint32_t v = 0; v < g.n; ++v)
        if ((clique & ~g.adj[v]) == 0) clique |= 1ull << v;
    return unpack(clique);
}

std::vector<std::uint32_t> max_independent_set_exact(const bitgraph& g) {
    bitgraph comp(g.n);
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = u + 1; v < g.n; ++v)
            if (!(g.adj[u] >> v & 1)) comp.add_edge(u, v);
    return max_clique_exact(comp);
}

}  // namespace tropcirc
