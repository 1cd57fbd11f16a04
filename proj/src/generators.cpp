#include "tropcirc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tropcirc {

namespace {

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

graph::graph(std::uint32_t n_, std::vector<std::pair<std::uint32_t, std::uint32_t>> e) : n(n_) {
    for (auto [u, v] : e) {
        require(u != v, errc::precondition, "graph: loop edge");
        require(u < n && v < n, errc::range, "graph: node out of range");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::uint32_t graph::max_degree() const {
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : edges) deg[u]++, deg[v]++;
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool graph::connected() const {
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            std::uint32_t w = (a == u) ? b : (b == u ? a : u);
            if (w != u && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

var_t knn_var(std::uint32_t n, std::uint32_t i, std::uint32_t j) { return i * n + j; }

var_t kn_edge_var(std::uint32_t n, std::uint32_t u, std::uint32_t v) {
    require(u != v && u < n && v < n, errc::range, "bad edge");
    if (u > v) std::swap(u, v);
    // Lexicographic rank of the pair (u, v) with u < v.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::uint32_t kn_edge_count(std::uint32_t n) { return n * (n - 1) / 2; }

polynomial gen_perm(std::uint32_t n) {
    require(n >= 2 && n <= 7, errc::range, "perm: n must be in [2, 7]");
    polynomial f(n * n);
    std::vector<std::uint32_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        std::vector<std::pair<var_t, exp_t>> es;
        for (std::uint32_t i = 0; i < n; ++i) es.emplace_back(knn_var(n, i, pi[i]), 1);
        f.add_term(monomial(es), 1);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return f;
}

polynomial gen_hc(std::uint32_t n) {
    require(n >= 3 && n <= 8, errc::range, "hc: n must be in [3, 8]");
    polynomial f(kn_edge_count(n));
    std::vector<std::uint32_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        if (rest.front() > rest.back()) continue;  // one orientation per cycle
        std::vector<std::pair<var_t, exp_t>> es;
        std::uint32_t prev = 0;
        for (std::uint32_t v : rest) {
            es.emplace_back(kn_edge_var(n, prev, v), 1);
            prev = v;
        }
        es.emplace_back(kn_edge_var(n, prev, 0), 1);
        f.add_term(monomial(es), 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return f;
}

polynomial gen_clique(std::uint32_t n, std::uint32_t k) {
    require(k >= 2 && k <= n && n <= 10, errc::range, "clique: need 2 <= k <= n <= 10");
    polynomial f(kn_edge_count(n));
    std::vector<std::uint32_t> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        std::vector<std::pair<var_t, exp_t>> es;
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t b = a + 1; b < k; ++b)
                es.emplace_back(kn_edge_var(n, sel[a], sel[b]), 1);
        f.add_term(monomial(es), 1);
        // next k-combination
        std::int64_t i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) --i;
        if (i < 0) break;
        sel[i]++;
        for (std::uint32_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return f;
}

namespace {

var_t st_edge_var(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    // i in {1..n-1}, j in {0..n-1} \ {i}
    return (i - 1) * (n - 1) + (j < i ? j : j - 1);
}

}  // namespace

polynomial gen_spanning_tree(std::uint32_t n) {
    require(n >= 3 && n <= 7, errc::range, "st: n must be in [3, 7]");
    polynomial f((n - 1) * (n - 1));
    std::vector<std::uint32_t> pi(n, 0);  // pi[i] for i >= 1
    std::uint64_t total = 1;
    for (std::uint32_t i = 1; i < n; ++i) total *= n;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        bool ok = true;
        for (std::uint32_t i = 1; i < n; ++i) {
            pi[i] = c % n;
            c /= n;
            if (pi[i] == i) ok = false;
        }
        if (!ok) continue;
        // every node must reach the root by iterating pi
        for (std::uint32_t i = 1; i < n && ok; ++i) {
            std::uint32_t cur = i;
            for (std::uint32_t steps = 0; cur != 0 && steps < n; ++steps) cur = pi[cur];
            ok = (cur == 0);
        }
        if (!ok) continue;
        std::vector<std::pair<var_t, exp_t>> es;
        for (std::uint32_t i = 1; i < n; ++i) es.emplace_back(st_edge_var(n, i, pi[i]), 1);
        f.add_term(monomial(es), 1);
    }
    return f;
}

polynomial gen_stconn_pair(std::uint32_t n, std::uint32_t s, std::uint32_t t) {
    require(n >= 2 && n <= 8, errc::range, "stconn: n must be in [2, 8]");
    require(s < n && t < n && s != t, errc::range, "stconn: bad endpoints");
    polynomial f(kn_edge_count(n));
    std::vector<std::uint32_t> path{s};
    std::vector<bool> used(n, false);
    used[s] = true;
    auto rec = [&](auto&& self) -> void {
        std::uint32_t cur = path.back();
        if (cur == t) {
            std::vector<std::pair<var_t, exp_t>> es;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                es.emplace_back(kn_edge_var(n, path[i], path[i + 1]), 1);
            f.add_term(monomial(es), 1);
            return;
        }
        for (std::uint32_t w = 0; w < n; ++w) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = false;
        }
    };
    rec(rec);
    return f;
}

polynomial gen_stconn(std::uint32_t n) { return gen_stconn_pair(n, 0, n - 1); }

polynomial gen_layered_stconn(std::uint32_t n, std::uint32_t d, std::size_t cap) {
    require(n >= 1 && d >= 2, errc::range, "layered: need n >= 1, d >= 2");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i + 1 < d; ++i) {
        count *= n;
        require(count <= cap, errc::cap, "layered: n^(d-1) exceeds the cap");
    }
    const std::uint32_t inner = d - 1;  // inner layers
    auto off = [&](std::uint32_t t) -> var_t {
        if (t == 0) return 0;
        return n + (t - 1) * n * n;
    };
    std::uint32_t n_vars = 2 * n + (d >= 2 ? (d - 2) * n * n : 0);
    polynomial f(n_vars);
    std::vector<std::uint32_t> a(inner, 0);
    while (true) {
        std::vector<std::pair<var_t, exp_t>> es;
        es.emplace_back(off(0) + a[0], 1);
        for (std::uint32_t t = 1; t + 1 <= inner; ++t)
            es.emplace_back(off(t) + a[t - 1] * n + a[t], 1);
        es.emplace_back(off(d - 1) + a[inner - 1], 1);
        f.add_term(monomial(es), 1);
        std::uint32_t i = 0;
        while (i < inner && ++a[i] == n) a[i++] = 0;
        if (i == inner) break;
    }
    return f;
}

polynomial gen_triangle(std::uint32_t n) {
    require(n >= 1 && n <= 6, errc::range, "triangle: n must be in [1, 6]");
    polynomial f(3 * n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                monomial m({{i * n + k, 1}, {n * n + k * n + j, 1}, {2 * n * n + i * n + j, 1}});
                f.add_term(m, 1);
            }
    return f;
}

poly_family gen_mp(std::uint32_t n) {
    require(n >= 1 && n <= 6, errc::range, "mp: n must be in [1, 6]");
    poly_family fam;
    fam.name = "mp" + std::to_string(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            polynomial f(2 * n * n);
            for (std::uint32_t k = 0; k < n; ++k)
                f.add_term(monomial({{i * n + k, 1}, {n * n + k * n + j, 1}}), 1);
            fam.members.emplace_back("f_" + std::to_string(i) + std::to_string(j), std::move(f));
        }
    return fam;
}

polynomial gen_conn(std::uint32_t n) {
    require(n >= 2 && n <= 4, errc::range, "conn: n must be in [2, 4]");
    polynomial f = polynomial::unit(kn_edge_count(n));
    for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = s + 1; t < n; ++t) f = f.times(gen_stconn_pair(n, s, t));
    return f;
}

polynomial gen_fG(const graph& g) {
    require(g.n >= 1 && g.n <= 16, errc::range, "fG: n must be in [1, 16]");
    polynomial f(g.n);
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        std::uint32_t odd = 0;
        for (auto [u, v] : g.edges)
            odd ^= ((mask >> u) & 1u) & ((mask >> v) & 1u);
        if (!odd) continue;
        std::vector<std::pair<var_t, exp_t>> es;
        for (std::uint32_t i = 0; i < g.n; ++i)
            if ((mask >> i) & 1u) es.emplace_back(i, 1);
        f.add_term(monomial(es), 1);
    }
    return f;
}

circuit build_floyd_warshall(std::uint32_t n) {
    require(n >= 2 && n <= 32, errc::range, "floyd-warshall: n must be in [2, 32]");
    circuit c(kn_edge_count(n));
    // cur[u][v]: gate holding the lightest walk value with inner nodes among
    // the first k nodes.
    std::vector<std::vector<gate_id>> cur(n, std::vector<gate_id>(n, 0));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            cur[u][v] = cur[v][u] = c.add_var(kn_edge_var(n, u, v));
    for (std::uint32_t k = 0; k < n; ++k) {
        auto next = cur;
        for (std::uint32_t u = 0; u < n; ++u) {
            if (u == k) continue;
            for (std::uint32_t v = u + 1; v < n; ++v) {
                if (v == k) continue;
                gate_id through = c.add_prod(cur[u][k], cur[k][v]);
                next[u][v] = next[v][u] = c.add_sum(cur[u][v], through);
            }
        }
        cur = next;
    }
    std::vector<gate_id> outs;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) outs.push_back(cur[u][v]);
    c.set_outputs(std::move(outs));
    return c;
}

std::size_t floyd_warshall_gate_count(std::uint32_t n) {
    return static_cast<std::size_t>(n) * (n - 1) * (n - 2);
}

circuit build_bellman_ford(std::uint32_t n) {
    require(n >= 2 && n <= 32, errc::range, "bellman-ford: n must be in [2, 32]");
    circuit c(kn_edge_count(n));
    std::vector<gate_id> edge_var(n * n, 0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            edge_var[u * n + v] = edge_var[v * n + u] = c.add_var(kn_edge_var(n, u, v));
    // f[j]: lightest walk 0 -> j with at most k edges, for j in {1..n-1}.
    std::vector<gate_id> f(n, 0);
    for (std::uint32_t j = 1; j < n; ++j) f[j] = edge_var[0 * n + j];
    for (std::uint32_t k = 2; k <= n - 1; ++k) {
        std::vector<gate_id> next = f;
        for (std::uint32_t j = 1; j < n; ++j) {
            gate_id acc = f[j];
            for (std::uint32_t i = 1; i < n; ++i) {
                if (i == j) continue;
                gate_id step = c.add_prod(f[i], edge_var[i * n + j]);
                acc = c.add_sum(acc, step);
            }
            next[j] = acc;
        }
        f = next;
    }
    c.set_outputs({f[n - 1]});
    return c;
}

circuit build_naive(const polynomial& f, std::size_t cap) {
    require(f.term_count() <= cap, errc::cap, "naive circuit: too many terms");
    circuit c(f.n_vars());
    if (f.empty()) {
        gate_id z = c.add_zero();
        c.set_outputs({z});
        return c;
    }
    std::vector<gate_id> var_node(f.n_vars(), UINT32_MAX);
    auto var_of = [&](var_t v) {
        if (var_node[v] == UINT32_MAX) var_node[v] = c.add_var(v);
        return var_node[v];
    };
    std::optional<gate_id> one_node;
    std::optional<gate_id> acc;
    for (const auto& [m, coeff] : f.terms()) {
        std::optional<gate_id> t;
        for (const auto& [v, e] : m.entries())
            for (exp_t x = 0; x < e; ++x)
                t = t ? c.add_prod(*t, var_of(v)) : var_of(v);
        if (!t) {
            if (!one_node) one_node = c.add_one();
            t = *one_node;
        }
        gate_id term = *t;
        for (coeff_t rep = 1; rep < coeff; ++rep) term = c.add_sum(term, *t);
        acc = acc ? c.add_sum(*acc, term) : term;
    }
    c.set_outputs({*acc});
    return c;
}

graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
    require(n >= 1, errc::range, "random_graph: n must be positive");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (unit_real(rng) < p) edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

polynomial random_polynomial(std::uint32_t n_vars, std::size_t terms, exp_t max_deg,
                             std::uint64_t seed) {
    require(n_vars >= 1 && max_deg >= 1, errc::range, "random_polynomial: bad parameters");
    std::mt19937_64 rng(seed);
    polynomial f(n_vars);
    for (std::size_t t = 0; t < terms; ++t) {
        exp_t d = 1 + static_cast<exp_t>(pick(rng, max_deg));
        std::vector<std::pair<var_t, exp_t>> es;
        for (exp_t i = 0; i < d; ++i)
            es.emplace_back(static_cast<var_t>(pick(rng, n_vars)), 1);
        f.add_term(monomial(es), 1);
    }
    return f;
}

polynomial random_multilinear_polynomial(std::uint32_t n_vars, std::size_t terms,
                                         std::uint64_t seed) {
    require(n_vars >= 1, errc::range, "random polynomial: bad parameters");
    std::mt19937_64 rng(seed);
    polynomial f(n_vars);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::pair<var_t, exp_t>> es;
        for (var_t v = 0; v < n_vars; ++v)
            if (rng() & 1u) es.emplace_back(v, 1);
        f.add_term(monomial(es), 1);
    }
    return f;
}

circuit random_circuit(const random_circuit_options& opt, std::uint64_t seed) {
    require(opt.n_vars >= 1 && opt.gates >= 1, errc::range, "random_circuit: bad parameters");
    std::mt19937_64 rng(seed);
    circuit c(opt.n_vars);
    for (var_t v = 0; v < opt.n_vars; ++v) c.add_var(v);
    if (unit_real(rng) < opt.constant_prob) c.add_one();
    if (opt.allow_zero && unit_real(rng) < opt.constant_prob) c.add_zero();
    gate_id last = 0;
    for (std::size_t g = 0; g < opt.gates; ++g) {
        gate_id a = static_cast<gate_id>(pick(rng, c.node_count()));
        gate_id b = static_cast<gate_id>(pick(rng, c.node_count()));
        last = unit_real(rng) < opt.product_bias ? c.add_prod(a, b) : c.add_sum(a, b);
    }
    c.set_outputs({last});
    return c;
}

}  // namespace tropcirc
