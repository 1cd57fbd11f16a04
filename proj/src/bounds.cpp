#include "tropcirc/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropcirc {

using nlohmann::json;

std::string measure_name(measure m) {
    switch (m) {
        case measure::produce_size: return "produce-size";
        case measure::min_size: return "min-size";
        case measure::max_size: return "max-size";
        case measure::mult_bool_size: return "multilinear-bool-size";
        case measure::depth: return "depth";
    }
    fail(errc::internal, "measure_name: bad measure");
}

measure measure_from_name(const std::string& s) {
    for (measure m : {measure::produce_size, measure::min_size, measure::max_size,
                      measure::mult_bool_size, measure::depth})
        if (measure_name(m) == s) return m;
    fail(errc::usage, "unknown measure '" + s + "'");
}

exec default_exec() {
#ifdef _OPENMP
    return exec::openmp;
#else
    return exec::serial;
#endif
}

json to_json(const certificate& c) {
    json chain = json::array();
    for (const chain_step& s : c.chain)
        chain.push_back(json{{"from", measure_name(s.from)},
                             {"to", measure_name(s.to)},
                             {"rule", s.rule}});
    return json{{"schema_version", certificate::schema_version},
                {"kind", c.kind},
                {"value", c.value},
                {"applies_to", measure_name(c.applies_to)},
                {"target", json{{"hash", c.target_hash}, {"terms", c.target_terms}}},
                {"witness", c.witness},
                {"chain", chain}};
}

certificate certificate_from_json(const json& j) {
    certificate c;
    require(j.value("schema_version", 0) == certificate::schema_version, errc::usage,
            "unsupported certificate schema version");
    c.kind = j.at("kind").get<std::string>();
    c.value = j.at("value").get<std::uint64_t>();
    c.applies_to = measure_from_name(j.at("applies_to").get<std::string>());
    c.target_hash = j.at("target").at("hash").get<std::uint64_t>();
    c.target_terms = j.at("target").at("terms").get<std::uint64_t>();
    c.witness = j.value("witness", json::object());
    for (const json& s : j.value("chain", json::array()))
        c.chain.push_back(chain_step{measure_from_name(s.at("from").get<std::string>()),
                                     measure_from_name(s.at("to").get<std::string>()),
                                     s.at("rule").get<std::string>()});
    return c;
}

namespace {

json monomial_to_witness(const monomial& m) {
    json exps = json::object();
    for (const auto& [v, e] : m.entries()) exps[std::to_string(v)] = e;
    return json{{"exps", exps}};
}

monomial monomial_from_witness(const json& j) {
    std::vector<std::pair<var_t, exp_t>> es;
    for (const auto& [key, val] : j.at("exps").items())
        es.emplace_back(static_cast<var_t>(std::stoul(key)), val.get<exp_t>());
    return monomial(es);
}

void stamp_target(certificate& c, const polynomial& f) {
    c.target_hash = f.set_hash();
    c.target_terms = f.term_count();
}

std::uint64_t ceil_div_u128(std::uint64_t a, unsigned __int128 b) {
    require(b > 0, errc::internal, "division by zero");
    unsigned __int128 q = (static_cast<unsigned __int128>(a) + b - 1) / b;
    return static_cast<std::uint64_t>(q);
}

}  // namespace

// --------------------------------------------------------------------------
// Separatedness / Schnorr measure
// --------------------------------------------------------------------------

namespace {

// p ~ q iff pq contains no monomial of f besides p and q.
bool pair_compatible(const polynomial& f, const monomial& p, const monomial& q) {
    monomial pq = p.times(q);
    for (const auto& [r, c] : f.terms()) {
        if (r == p || r == q) continue;
        if (pq.contains(r)) return false;
    }
    return true;
}

}  // namespace

bool separated_check(const polynomial& f, const std::vector<monomial>& P) {
    for (const monomial& p : P)
        require(f.has_monomial(p), errc::precondition, "P is not a subset of f");
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            if (P[i] == P[j]) continue;
            if (!pair_compatible(f, P[i], P[j])) return false;
        }
    return true;
}

certificate max_separated(const polynomial& f, search_mode mode) {
    require(!f.empty(), errc::precondition, "separation measure of the empty polynomial");
    std::vector<monomial> mons = f.monomials();
    std::vector<std::uint32_t> chosen;
    if (mode == search_mode::exact) {
        require(mons.size() <= 64, errc::cap,
                "exact separation search limited to 64 monomials");
        bitgraph g(static_cast<std::uint32_t>(mons.size()));
        for (std::uint32_t i = 0; i < mons.size(); ++i)
            for (std::uint32_t j = i + 1; j < mons.size(); ++j)
                if (pair_compatible(f, mons[i], mons[j])) g.add_edge(i, j);
        chosen = max_clique_exact(g);
    } else {
        require(mons.size() <= 4096, errc::cap, "greedy separation search cap");
        for (std::uint32_t i = 0; i < mons.size(); ++i) {
            bool ok = true;
            for (std::uint32_t j : chosen) ok = ok && pair_compatible(f, mons[i], mons[j]);
            if (ok) chosen.push_back(i);
        }
    }
    json wit_set = json::array();
    for (std::uint32_t i : chosen) wit_set.push_back(monomial_to_witness(mons[i]));
    certificate cert;
    cert.kind = "schnorr";
    cert.value = chosen.size() - 1;
    cert.applies_to = measure::produce_size;
    cert.witness = json{{"separated", wit_set},
                        {"mode", mode == search_mode::exact ? "exact" : "greedy"}};
    stamp_target(cert, f);
    return cert;
}

std::uint64_t separation_measure(const polynomial& f, search_mode mode) {
    return max_separated(f, mode).value;
}

progress_report progress_measure_suite(const polynomial& g, std::size_t samples,
                                       std::uint64_t seed) {
    require(g.n_vars() >= 2, errc::precondition, "enrichment needs at least two variables");
    require(!g.empty(), errc::precondition, "enrichment of the empty polynomial");
    std::mt19937_64 rng(seed);
    progress_report rep;
    std::vector<var_t> supp(g.support().begin(), g.support().end());
    require(!supp.empty(), errc::precondition, "enrichment of a constant polynomial");
    std::uint64_t s_g = separation_measure(g);
    std::size_t guard = 0;
    while (rep.steps < samples && guard++ < samples * 20) {
        var_t k = supp[rng() % supp.size()];
        var_t i = static_cast<var_t>(rng() % g.n_vars());
        var_t j = static_cast<var_t>(rng() % g.n_vars());
        if (i == k || j == k) continue;
        bool product_mode = rng() & 1u;
        polynomial h = g.enrich(k, i, j,
                                product_mode ? polynomial::enrich_mode::product
                                             : polynomial::enrich_mode::sum);
        if (h.term_count() > 64) continue;  // outside the exact-search cap
        std::uint64_t s_h = separation_measure(h);
        rep.steps++;
        if (product_mode) {
            if (s_h > s_g) {
                rep.product_violations++;
                rep.details.push_back("product enrichment raised the measure: " +
                                      std::to_string(s_g) + " -> " + std::to_string(s_h));
            }
        } else if (s_h > s_g + 1) {
            rep.sum_violations++;
            rep.details.push_back("sum enrichment raised the measure by more than one: " +
                                  std::to_string(s_g) + " -> " + std::to_string(s_h));
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// (k,l)-freeness
// --------------------------------------------------------------------------

kl_result kl_free_check(const polynomial& f, std::uint64_t k, std::uint64_t l) {
    require(k >= 1 && l >= 1, errc::range, "kl-free: k and l must be positive");
    require(f.is_multilinear(), errc::precondition,
            "kl-free search requires a multilinear polynomial");
    require(f.term_count() <= 4096, errc::cap, "kl-free search cap: 4096 monomials");
    std::vector<var_t> supp(f.support().begin(), f.support().end());
    require(supp.size() <= 24, errc::cap, "kl-free search cap: 24 support variables");

    std::vector<monomial> mons = f.monomials();
    const std::size_t nsup = supp.size();
    std::unordered_map<var_t, std::size_t> pos;
    for (std::size_t i = 0; i < nsup; ++i) pos[supp[i]] = i;
    // Monomial as a support bitmask (multilinear).
    std::vector<std::uint32_t> mask(mons.size(), 0);
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (const auto& [v, e] : mons[i].entries()) mask[i] |= 1u << pos[v];

    for (std::uint32_t ymask = 1; ymask + 1 < (1u << nsup); ++ymask) {
        // Distinct Y-parts (rows) and Z-parts (cols) of each monomial.
        std::map<std::uint32_t, std::size_t> row_id, col_id;
        std::vector<std::vector<std::uint64_t>> row_cols;  // bitset over cols
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
        for (std::size_t i = 0; i < mons.size(); ++i) {
            std::uint32_t y = mask[i] & ymask;
            std::uint32_t z = mask[i] & ~ymask;
            auto [rit, rnew] = row_id.emplace(y, row_id.size());
            auto [cit, cnew] = col_id.emplace(z, col_id.size());
            cells.emplace_back(rit->second, cit->second);
        }
        if (row_id.size() <= k || col_id.size() <= l) continue;
        std::size_t words = (col_id.size() + 63) / 64;
        row_cols.assign(row_id.size(), std::vector<std::uint64_t>(words, 0));
        for (auto [r, c] : cells) row_cols[r][c / 64] |= 1ull << (c % 64);

        // Search for k+1 rows whose common columns number at least l+1.
        std::vector<std::size_t> rows;
        std::vector<std::uint64_t> inter(words);
        auto popcount_all = [&](const std::vector<std::uint64_t>& bs) {
            std::uint64_t c = 0;
            for (std::uint64_t w : bs) c += __builtin_popcountll(w);
            return c;
        };
        std::optional<kl_witness> found;
        auto rec = [&](auto&& self, std::size_t start,
                       std::vector<std::uint64_t> cur) -> void {
            if (found) return;
            if (rows.size() == k + 1) {
                if (popcount_all(cur) >= l + 1) {
                    // Reconstruct the witness polynomials.
                    kl_witness w{polynomial(f.n_vars()), polynomial(f.n_vars())};
                    std::vector<std::uint32_t> row_key(row_id.size());
                    for (const auto& [key, id] : row_id) row_key[id] = key;
                    std::vector<std::uint32_t> col_key(col_id.size());
                    for (const auto& [key, id] : col_id) col_key[id] = key;
                    auto unmask = [&](std::uint32_t bm) {
                        std::vector<std::pair<var_t, exp_t>> es;
                        for (std::size_t i = 0; i < nsup; ++i)
                            if (bm >> i & 1u) es.emplace_back(supp[i], 1);
                        return monomial(es);
                    };
                    for (std::size_t r : rows) w.a.add_term(unmask(row_key[r]), 1);
                    std::uint64_t taken = 0;
                    for (std::size_t c = 0; c < col_id.size() && taken < l + 1; ++c)
                        if (cur[c / 64] >> (c % 64) & 1ull) {
                            w.b.add_term(unmask(col_key[c]), 1);
                            taken++;
                        }
                    found = std::move(w);
                }
                return;
            }
            for (std::size_t r = start; r < row_cols.size(); ++r) {
                if (row_cols.size() - r < k + 1 - rows.size()) break;
                std::vector<std::uint64_t> next(words);
                std::uint64_t cnt = 0;
                for (std::size_t wd = 0; wd < words; ++wd) {
                    next[wd] = cur[wd] & row_cols[r][wd];
                    cnt += __builtin_popcountll(next[wd]);
                }
                if (cnt < l + 1) continue;
                rows.push_back(r);
                self(self, r + 1, std::move(next));
                rows.pop_back();
                if (found) return;
            }
        };
        std::vector<std::uint64_t> full(words, ~0ull);
        if (col_id.size() % 64)
            full[words - 1] = (1ull << (col_id.size() % 64)) - 1;
        rec(rec, 0, full);
        if (found) return kl_result{false, std::move(found)};
    }
    return kl_result{true, std::nullopt};
}

certificate kl_bound(const polynomial& f, std::uint64_t k, std::uint64_t l) {
    require(k <= l, errc::precondition, "kl bound requires k <= l");
    kl_result res = kl_free_check(f, k, l);
    require(res.free, errc::precondition, "polynomial is not (k,l)-free");
    unsigned __int128 denom = 2;
    denom *= k;
    denom *= l;
    denom *= l;
    certificate cert;
    cert.kind = "kl-free";
    cert.value = ceil_div_u128(f.term_count(), denom);
    cert.applies_to = measure::produce_size;
    cert.witness = json{{"k", k}, {"l", l}, {"terms", f.term_count()}, {"free", true}};
    stamp_target(cert, f);
    return cert;
}

// --------------------------------------------------------------------------
// Rectangle bound
// --------------------------------------------------------------------------

certificate rectangle_bound(const polynomial& f, balance_measure bm) {
    require(!f.empty(), errc::precondition, "rectangle bound of the empty polynomial");
    ext_int me = bm == balance_measure::degree ? f.min_degree() : f.min_length();
    std::uint64_t m = static_cast<std::uint64_t>(me.value());
    require(m >= 3, errc::precondition, "rectangle bound needs minimum measure at least 3");
    std::uint64_t lo = (m + 2) / 3;      // ceil(m/3)
    std::uint64_t hi = (2 * m) / 3;      // floor(2m/3)
    std::map<std::uint64_t, std::uint64_t> dens;
    auto density = [&](std::uint64_t r) {
        auto it = dens.find(r);
        if (it == dens.end())
            it = dens.emplace(r, f.factor_density(static_cast<exp_t>(r))).first;
        return it->second;
    };
    std::uint64_t best = UINT64_MAX, best_r = 0;
    for (std::uint64_t r = lo; r <= hi; ++r) {
        unsigned __int128 denom =
            static_cast<unsigned __int128>(density(r)) * density(m - r);
        std::uint64_t v = ceil_div_u128(f.term_count(), denom);
        if (v < best) best = v, best_r = r;
    }
    certificate cert;
    cert.kind = "rectangle";
    cert.value = best;
    cert.applies_to = measure::produce_size;
    cert.witness = json{{"measure", bm == balance_measure::degree ? "degree" : "length"},
                        {"m", m},
                        {"window", json::array({lo, hi})},
                        {"r", best_r},
                        {"density_r", density(best_r)},
                        {"density_m_r", density(m - best_r)},
                        {"terms", f.term_count()}};
    stamp_target(cert, f);
    return cert;
}

// --------------------------------------------------------------------------
// Expander machinery
// --------------------------------------------------------------------------

namespace {

struct partition_matching {
    std::uint32_t size;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Largest induced matching among the crossing edges of the partition
// (S, complement). "Induced" is relative to the crossing edges only.
partition_matching best_crossing_matching(const graph& g, std::uint32_t smask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> crossing;
    for (auto [u, v] : g.edges)
        if (((smask >> u) & 1u) != ((smask >> v) & 1u)) crossing.push_back({u, v});
    require(crossing.size() <= 64, errc::cap, "too many crossing edges");
    bitgraph conflict(static_cast<std::uint32_t>(crossing.size()));
    auto joined = [&](std::uint32_t a, std::uint32_t b) {
        for (auto [u, v] : crossing)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    };
    for (std::uint32_t i = 0; i < crossing.size(); ++i)
        for (std::uint32_t j = i + 1; j < crossing.size(); ++j) {
            auto [a1, b1] = crossing[i];
            auto [a2, b2] = crossing[j];
            bool conflicting = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 ||
                               joined(a1, a2) || joined(a1, b2) || joined(b1, a2) ||
                               joined(b1, b2);
            if (conflicting) conflict.add_edge(i, j);
        }
    partition_matching out;
    std::vector<std::uint32_t> mis = max_independent_set_exact(conflict);
    out.size = static_cast<std::uint32_t>(mis.size());
    for (std::uint32_t i : mis) out.edges.push_back(crossing[i]);
    return out;
}

bool balanced(std::uint32_t n, std::uint32_t s) { return 3 * s >= n && 3 * s <= 2 * n; }

}  // namespace

matching_result matching_number(const graph& g, exec ex) {
    require(g.n >= 2 && g.n <= 14, errc::range, "matching number: n must be in [2, 14]");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
        if (!(m & 1u)) continue;  // canonical side contains node 0
        std::uint32_t s = static_cast<std::uint32_t>(__builtin_popcount(m));
        if (balanced(g.n, s) && balanced(g.n, g.n - s)) masks.push_back(m);
    }
    require(!masks.empty(), errc::internal, "no balanced partitions");

    std::uint32_t best_val = UINT32_MAX;
    std::uint32_t best_mask = 0;
    if (ex == exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(masks.size()); ++i) {
            partition_matching pm = best_crossing_matching(g, masks[i]);
#pragma omp critical
            {
                if (pm.size < best_val || (pm.size == best_val && masks[i] < best_mask)) {
                    best_val = pm.size;
                    best_mask = masks[i];
                }
            }
        }
#else
        ex = exec::serial;
#endif
    }
    if (ex == exec::serial) {
        for (std::uint32_t m : masks) {
            partition_matching pm = best_crossing_matching(g, m);
            if (pm.size < best_val) {
                best_val = pm.size;
                best_mask = m;
            }
        }
    }
    matching_result res;
    res.value = best_val;
    for (std::uint32_t i = 0; i < g.n; ++i)
        if (best_mask >> i & 1u) res.partition_side.push_back(i);
    res.matching = best_crossing_matching(g, best_mask).edges;
    return res;
}

certificate expander_bound(const graph& g, exec ex) {
    require(!g.edges.empty(), errc::precondition, "expander bound needs a non-empty graph");
    matching_result mr = matching_number(g, ex);
    polynomial f = gen_fG(g);
    certificate cert;
    cert.kind = "expander";
    cert.value = mr.value >= 2 ? (1ull << (mr.value - 2)) : 1;
    cert.applies_to = measure::produce_size;
    json part = json::array();
    for (std::uint32_t v : mr.partition_side) part.push_back(v);
    json match = json::array();
    for (auto [u, v] : mr.matching) match.push_back(json::array({u, v}));
    cert.witness = json{{"n", g.n},
                        {"matching_number", mr.value},
                        {"partition", part},
                        {"matching", match}};
    stamp_target(cert, f);
    return cert;
}

bool mixedness_check(const graph& g, std::uint32_t s) {
    require(g.n <= 14, errc::range, "mixedness: n must be at most 14");
    require(s >= 1, errc::range, "mixedness: s must be positive");
    if (2 * s > g.n) return true;  // no two disjoint s-sets exist
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) adj[u] |= 1u << v, adj[v] |= 1u << u;

    std::vector<std::uint32_t> asets;
    std::vector<std::uint32_t> sel;
    auto combos = [&](auto&& self, std::uint32_t start, std::uint32_t need,
                      std::uint32_t acc, auto&& sink) -> void {
        if (need == 0) {
            sink(acc);
            return;
        }
        for (std::uint32_t v = start; v + need <= g.n; ++v)
            self(self, v + 1, need - 1, acc | (1u << v), sink);
    };
    bool mixed = true;
    combos(combos, 0, s, 0u, [&](std::uint32_t a) {
        if (!mixed) return;
        std::uint32_t reach = 0;
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (a >> v & 1u) reach |= adj[v];
        // Enumerate B disjoint from A with min(B) > min(A) to halve the work.
        std::uint32_t amin = __builtin_ctz(a);
        combos(combos, amin + 1, s, 0u, [&](std::uint32_t b) {
            if (!mixed || (a & b)) return;
            if (!(reach & b)) mixed = false;
        });
    });
    return mixed;
}

rectangle_search_result max_balanced_rectangle(const polynomial& f, exec ex) {
    require(f.is_multilinear(), errc::precondition, "rectangle search needs multilinear input");
    const std::uint32_t n = f.n_vars();
    require(n >= 3 && n <= 9, errc::range, "rectangle search: n_vars must be in [3, 9]");
    std::vector<std::uint32_t> mmask;
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t bm = 0;
        for (const auto& [v, e] : m.entries()) bm |= 1u << v;
        mmask.push_back(bm);
    }

    std::vector<std::uint32_t> splits;
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
        if (!(y & 1u)) continue;  // canonical: variable 0 on the Y side
        std::uint32_t s = static_cast<std::uint32_t>(__builtin_popcount(y));
        if (balanced(n, s) && balanced(n, n - s)) splits.push_back(y);
    }
    require(!splits.empty(), errc::internal, "no balanced variable splits");

    auto eval_split = [&](std::uint32_t ymask) {
        rectangle_search_result local{0, {}, 0, 0};
        std::map<std::uint32_t, std::size_t> part_a, part_b;
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::uint32_t bm : mmask) {
            auto [ia, na] = part_a.emplace(bm & ymask, part_a.size());
            auto [ib, nb] = part_b.emplace(bm & ~ymask, part_b.size());
            cells.emplace_back(ia->second, ib->second);
        }
        // Enumerate subsets on the side with fewer distinct parts; the other
        // side must fit a 64-bit row mask.
        bool swap_sides = part_a.size() < part_b.size();
        std::size_t ncols = swap_sides ? part_a.size() : part_b.size();
        std::size_t nrows = swap_sides ? part_b.size() : part_a.size();
        require(nrows <= 64, errc::cap, "rectangle search row overflow");
        std::vector<std::uint64_t> colrows(ncols, 0);
        for (auto [ra, cb] : cells) {
            std::size_t row = swap_sides ? cb : ra;
            std::size_t col = swap_sides ? ra : cb;
            colrows[col] |= 1ull << row;
        }
        std::uint64_t best = 0, best_rows = 0, best_cols = 0;
        auto rec = [&](auto&& self, std::size_t idx, std::uint64_t inter,
                       std::uint64_t chosen) -> void {
            std::uint64_t rows_now = static_cast<std::uint64_t>(__builtin_popcountll(inter));
            if (chosen > 0) {
                std::uint64_t v = rows_now * chosen;
                if (v > best) best = v, best_rows = rows_now, best_cols = chosen;
            }
            if (idx == ncols || rows_now == 0) return;
            // Even taking every remaining column cannot beat the incumbent.
            if (rows_now * (chosen + (ncols - idx)) <= best) return;
            self(self, idx + 1, inter & colrows[idx], chosen + 1);
            self(self, idx + 1, inter, chosen);
        };
        std::uint64_t full_rows = nrows == 64 ? ~0ull : (1ull << nrows) - 1;
        rec(rec, 0, full_rows, 0);
        local.max_product_terms = best;
        local.rows = swap_sides ? best_cols : best_rows;
        local.cols = swap_sides ? best_rows : best_cols;
        for (std::uint32_t v = 0; v < n; ++v)
            if (ymask >> v & 1u) local.side.push_back(v);
        return local;
    };

    rectangle_search_result best{0, {}, 0, 0};
    std::uint32_t best_mask = UINT32_MAX;
    if (ex == exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(splits.size()); ++i) {
            rectangle_search_result r = eval_split(splits[i]);
#pragma omp critical
            {
                if (r.max_product_terms > best.max_product_terms ||
                    (r.max_product_terms == best.max_product_terms && splits[i] < best_mask)) {
                    best = r;
                    best_mask = splits[i];
                }
            }
        }
#else
        ex = exec::serial;
#endif
    }
    if (ex == exec::serial) {
        for (std::uint32_t y : splits) {
            rectangle_search_result r = eval_split(y);
            if (r.max_product_terms > best.max_product_terms) {
                best = r;
                best_mask = y;
            }
        }
    }
    return best;
}

// --------------------------------------------------------------------------
// Depth bounds
// --------------------------------------------------------------------------

rational64 make_rational(std::uint64_t num, std::uint64_t den) {
    require(den > 0, errc::internal, "rational with zero denominator");
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return rational64{num / g, den / g};
}

rational64 rat_mul(const rational64& a, const rational64& b) {
    std::uint64_t g1 = std::gcd(a.num, b.den);
    std::uint64_t g2 = std::gcd(b.num, a.den);
    std::uint64_t n1 = a.num / (g1 ? g1 : 1), d2 = b.den / (g1 ? g1 : 1);
    std::uint64_t n2 = b.num / (g2 ? g2 : 1), d1 = a.den / (g2 ? g2 : 1);
    std::uint64_t num, den;
    require(!__builtin_mul_overflow(n1, n2, &num) && !__builtin_mul_overflow(d1, d2, &den),
            errc::cap, "rational overflow");
    return make_rational(num, den);
}

std::int64_t ceil_log2(const rational64& r) {
    require(r.num > 0, errc::precondition, "log of a non-positive rational");
    if (r.num == r.den) return 0;
    if (r.num > r.den) {
        unsigned __int128 cur = r.den;
        std::int64_t k = 0;
        while (cur < r.num) cur <<= 1, ++k;
        return k;
    }
    unsigned __int128 cur = r.num;
    std::int64_t j = 0;
    while ((cur << 1) <= r.den) cur <<= 1, ++j;
    return -j;
}

namespace {

bool rat_less(const rational64& a, const rational64& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
}

std::uint32_t ceil_log2_int(std::uint64_t d) {
    std::uint32_t m = 0;
    std::uint64_t p = 1;
    while (p < d) p <<= 1, ++m;
    return m;
}

}  // namespace

rational64 depth_decrease(const polynomial& f, std::uint32_t r, std::uint32_t s) {
    ext_int de = f.min_degree();
    require(de.is_finite(), errc::precondition, "decrease of the empty polynomial");
    std::uint64_t d = static_cast<std::uint64_t>(de.value());
    require(1 <= s && s < r && r <= d, errc::range, "decrease needs 1 <= s < r <= d");
    std::uint64_t num = f.factor_density(static_cast<exp_t>(d - r));
    unsigned __int128 den = static_cast<unsigned __int128>(
                                f.factor_density(static_cast<exp_t>(d - s))) *
                            f.factor_density(static_cast<exp_t>(d - r + s));
    require(den <= UINT64_MAX, errc::cap, "density overflow");
    return make_rational(num, static_cast<std::uint64_t>(den));
}

certificate depth_lower_bound(const polynomial& f) {
    ext_int de = f.min_degree();
    require(de.is_finite() && de.value() >= 2, errc::precondition,
            "depth bound needs minimum degree at least 2");
    std::uint64_t d = static_cast<std::uint64_t>(de.value());
    require(d <= 64, errc::cap, "depth bound cap: minimum degree 64");
    std::uint32_t m = ceil_log2_int(d);

    std::vector<std::uint64_t> dens(d);
    for (std::uint64_t i = 0; i < d; ++i)
        dens[i] = f.factor_density(static_cast<exp_t>(i));
    auto decrease = [&](std::uint64_t r, std::uint64_t s) {
        unsigned __int128 den =
            static_cast<unsigned __int128>(dens[d - s]) * dens[d - r + s];
        require(den <= UINT64_MAX, errc::cap, "density overflow");
        return make_rational(dens[d - r], static_cast<std::uint64_t>(den));
    };

    std::optional<rational64> best;
    std::vector<std::uint64_t> seq{d}, best_seq;
    rational64 prod{1, 1};
    auto rec = [&](auto&& self, std::uint64_t cur, std::uint32_t left,
                   rational64 acc) -> void {
        if (left == 0) {
            if (cur != 1) return;
            if (!best || rat_less(acc, *best)) {
                best = acc;
                best_seq = seq;
            }
            return;
        }
        // Each step at most halves, so 1 must stay reachable; strict descent
        // must also leave room for the remaining steps.
        if (cur > (1ull << left)) return;
        if (cur < static_cast<std::uint64_t>(left) + 1) return;
        std::uint64_t lo = (cur + 1) / 2;  // next >= cur/2
        for (std::uint64_t next = lo > 1 ? lo : 1; next < cur; ++next) {
            seq.push_back(next);
            self(self, next, left - 1, rat_mul(acc, decrease(cur, next)));
            seq.pop_back();
        }
    };
    rec(rec, d, m, prod);
    require(best.has_value(), errc::internal, "no admissible degree sequence");

    std::int64_t value = static_cast<std::int64_t>(m) + ceil_log2(*best);
    certificate cert;
    cert.kind = "depth";
    cert.value = value > 0 ? static_cast<std::uint64_t>(value) : 0;
    cert.applies_to = measure::depth;
    json seq_json = json::array();
    for (std::uint64_t r : best_seq) seq_json.push_back(r);
    json dec_json = json::array();
    for (std::size_t i = 0; i + 1 < best_seq.size(); ++i) {
        rational64 n = decrease(best_seq[i], best_seq[i + 1]);
        dec_json.push_back(json{{"num", n.num}, {"den", n.den}});
    }
    cert.witness = json{{"min_degree", d},
                        {"steps", m},
                        {"sequence", seq_json},
                        {"decreases", dec_json},
                        {"product", json{{"num", best->num}, {"den", best->den}}}};
    stamp_target(cert, f);
    return cert;
}

// --------------------------------------------------------------------------
// Transfer
// --------------------------------------------------------------------------

namespace {

const char* rule_idempotent = "idempotent-compute-le-produce";
const char* rule_envelope = "envelope-route";
const char* rule_homog = "homogeneous-equality";

}  // namespace

certificate transfer(const certificate& cert, const polynomial& f, measure target) {
    require(target != cert.applies_to, errc::precondition, "certificate already applies");
    certificate out = cert;
    out.kind = "transfer";
    out.witness = json{{"base", to_json(cert)}};
    auto finish = [&](const char* rule) {
        out.chain.push_back(chain_step{cert.applies_to, target, rule});
        out.applies_to = target;
        stamp_target(out, f);
        return out;
    };

    const bool is_compute_measure = cert.applies_to == measure::min_size ||
                                    cert.applies_to == measure::max_size ||
                                    cert.applies_to == measure::mult_bool_size;
    if (is_compute_measure && target == measure::produce_size) {
        require(cert.target_hash == f.set_hash(), errc::precondition,
                "certificate was computed for a different polynomial");
        return finish(rule_idempotent);
    }

    if (cert.applies_to == measure::produce_size &&
        (target == measure::min_size || target == measure::max_size ||
         target == measure::mult_bool_size)) {
        if (cert.target_hash == f.set_hash() && f.is_homogeneous() && f.is_multilinear())
            return finish(rule_homog);
        if (target == measure::min_size && f.is_multilinear() &&
            cert.target_hash == f.lower_envelope().set_hash())
            return finish(rule_envelope);
        if (target == measure::max_size && f.is_multilinear() &&
            cert.target_hash == f.higher_envelope().set_hash())
            return finish(rule_envelope);
        fail(errc::precondition,
             "transfer to " + measure_name(target) +
                 " requires a homogeneous multilinear target or the matching envelope");
    }
    fail(errc::precondition, "no licensed transfer from " + measure_name(cert.applies_to) +
                                 " to " + measure_name(target));
}

// --------------------------------------------------------------------------
// Witness re-verification
// --------------------------------------------------------------------------

namespace {

void check(verification_report& rep, bool cond, const std::string& what) {
    if (!cond) {
        rep.ok = false;
        rep.findings.push_back(what);
    }
}

}  // namespace

verification_report verify_certificate_witness(const certificate& cert, const polynomial& f) {
    verification_report rep;
    if (cert.kind != "transfer") {
        check(rep, cert.target_hash == f.set_hash(), "certificate targets a different polynomial");
        if (!rep.ok) return rep;
    }
    if (cert.kind == "schnorr") {
        std::vector<monomial> P;
        for (const json& mj : cert.witness.at("separated")) P.push_back(monomial_from_witness(mj));
        check(rep, separated_check(f, P), "witness set is not separated");
        check(rep, cert.value == P.size() - 1, "value does not match the witness size");
    } else if (cert.kind == "kl-free") {
        std::uint64_t k = cert.witness.at("k").get<std::uint64_t>();
        std::uint64_t l = cert.witness.at("l").get<std::uint64_t>();
        check(rep, kl_free_check(f, k, l).free, "polynomial is not (k,l)-free");
        unsigned __int128 denom = static_cast<unsigned __int128>(2) * k * l * l;
        check(rep, cert.value == ceil_div_u128(f.term_count(), denom), "value formula mismatch");
    } else if (cert.kind == "rectangle") {
        balance_measure bm = cert.witness.at("measure").get<std::string>() == "length"
                                 ? balance_measure::length
                                 : balance_measure::degree;
        certificate fresh = rectangle_bound(f, bm);
        check(rep, fresh.value == cert.value, "recomputed rectangle value differs");
    } else if (cert.kind == "depth") {
        certificate fresh = depth_lower_bound(f);
        check(rep, fresh.value == cert.value, "recomputed depth value differs");
        std::vector<std::uint64_t> seq =
            cert.witness.at("sequence").get<std::vector<std::uint64_t>>();
        std::uint64_t d = static_cast<std::uint64_t>(f.min_degree().value());
        check(rep, !seq.empty() && seq.front() == d && seq.back() == 1,
              "sequence endpoints are wrong");
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            check(rep, seq[i + 1] < seq[i] && 2 * seq[i + 1] >= seq[i],
                  "sequence step is not admissible");
        check(rep, seq.size() == cert.witness.at("steps").get<std::uint64_t>() + 1,
              "sequence length mismatch");
    } else if (cert.kind == "expander") {
        rep.ok = false;
        rep.findings.push_back("expander certificates need the graph overload");
    } else if (cert.kind == "transfer") {
        certificate base = certificate_from_json(cert.witness.at("base"));
        check(rep, !cert.chain.empty(), "transfer without a chain");
        if (!rep.ok) return rep;
        const chain_step& step = cert.chain.back();
        polynomial base_poly = f;
        if (step.rule == rule_envelope) {
            check(rep, f.is_multilinear(), "envelope route requires a multilinear polynomial");
            base_poly = step.to == measure::min_size ? f.lower_envelope() : f.higher_envelope();
        } else if (step.rule == rule_homog) {
            check(rep, f.is_homogeneous() && f.is_multilinear(),
                  "equality route requires homogeneous multilinear f");
        } else if (step.rule != rule_idempotent) {
            check(rep, false, "unknown chain rule " + step.rule);
        }
        check(rep, base.target_hash == base_poly.set_hash(),
              "base certificate does not match the routed polynomial");
        check(rep, base.value == cert.value, "transfer changed the value");
        if (rep.ok && base.kind != "expander") {
            verification_report inner = verify_certificate_witness(base, base_poly);
            check(rep, inner.ok,
                  inner.findings.empty() ? "base verification failed" : inner.findings.front());
        }
    } else {
        check(rep, false, "unknown certificate kind " + cert.kind);
    }
    return rep;
}

verification_report verify_certificate_witness(const certificate& cert, const polynomial& f,
                                               const graph& g) {
    if (cert.kind != "expander") return verify_certificate_witness(cert, f);
    verification_report rep;
    check(rep, cert.target_hash == f.set_hash(), "certificate targets a different polynomial");
    check(rep, f.set_equal(gen_fG(g)), "polynomial is not the odd-subgraph polynomial of g");
    std::uint32_t m = cert.witness.at("matching_number").get<std::uint32_t>();
    matching_result fresh = matching_number(g);
    check(rep, fresh.value == m, "recomputed matching number differs");
    check(rep, cert.value == (m >= 2 ? (1ull << (m - 2)) : 1), "value formula mismatch");
    // The witness partition must be balanced and admit exactly the claimed
    // maximum induced matching.
    std::vector<std::uint32_t> side =
        cert.witness.at("partition").get<std::vector<std::uint32_t>>();
    std::uint32_t smask = 0;
    for (std::uint32_t v : side) smask |= 1u << v;
    std::uint32_t s = static_cast<std::uint32_t>(side.size());
    check(rep, 3 * s >= g.n && 3 * s <= 2 * g.n, "witness partition is not balanced");
    check(rep, best_crossing_matching(g, smask).size == m,
          "witness partition does not realize the matching number");
    return rep;
}

}  // namespace tropcirc
