// Command-line front end: generators, evaluation, production, decomposition,
// equivalence, lower-bound certificates, the brute-force oracle, and the
// desk-scale summary report.
//
// Exit codes: 0 success, 2 usage, 3 range/cap, 4 failed mathematical
// precondition, 5 internal invariant violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "tropcirc/bounds.hpp"
#include "tropcirc/circuit_analysis.hpp"
#include "tropcirc/equivalence.hpp"
#include "tropcirc/generators.hpp"
#include "tropcirc/json_io.hpp"
#include "tropcirc/oracle.hpp"

namespace tc = tropcirc;
using tc::json;

namespace {

int exit_code(tc::errc kind) {
    switch (kind) {
        case tc::errc::usage: return 2;
        case tc::errc::range:
        case tc::errc::cap: return 3;
        case tc::errc::domain:
        case tc::errc::precondition: return 4;
        case tc::errc::internal: return 5;
    }
    return 5;
}

struct output_options {
    std::string format = "json";
};

void emit(const output_options& out, const json& j, const std::string& text) {
    if (out.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<tc::ext_int> parse_assignment(const std::string& spec) {
    json j = json::parse(spec, nullptr, true);
    std::vector<tc::ext_int> out;
    for (const json& v : j) out.push_back(tc::ext_int_from_json(v));
    return out;
}

tc::polynomial load_poly(const std::string& path) {
    return tc::polynomial_from_json(tc::load_json_file(path));
}

tc::circuit load_circuit(const std::string& path) {
    return tc::circuit_from_json(tc::load_json_file(path));
}

std::string poly_text(const tc::polynomial& f) {
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) s += " + ";
        first = false;
        if (c != 1) s += std::to_string(c) + "*";
        s += m.str();
    }
    if (first) s = "0";
    return s + "\n";
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct gen_options {
    std::string family;
    std::uint32_t n = 3, k = 3, d = 2;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::size_t terms = 4;
    tc::exp_t max_deg = 2;
    std::string graph_path, poly_path;
    bool undirected = false;
};

int run_gen(const gen_options& g, const output_options& out) {
    json j;
    std::string text;
    if (g.family == "perm") {
        j = tc::to_json(tc::gen_perm(g.n));
    } else if (g.family == "hc") {
        j = tc::to_json(tc::gen_hc(g.n));
    } else if (g.family == "clique") {
        j = tc::to_json(tc::gen_clique(g.n, g.k));
    } else if (g.family == "st") {
        if (g.undirected) {
            // One monomial per spanning tree over the undirected edge
            // variables of K_n (the encoding the boolean comparison with
            // conn expects).
            tc::polynomial dir = tc::gen_spanning_tree(g.n);
            tc::polynomial und(tc::kn_edge_count(g.n));
            for (const auto& [m, c] : dir.terms()) {
                std::vector<std::pair<tc::var_t, tc::exp_t>> es;
                for (const auto& [v, e] : m.entries()) {
                    std::uint32_t i = 1 + v / (g.n - 1);
                    std::uint32_t rj = v % (g.n - 1);
                    std::uint32_t jj = rj < i ? rj : rj + 1;
                    es.emplace_back(tc::kn_edge_var(g.n, i, jj), 1);
                }
                und.add_term(tc::monomial(es), 1);
            }
            j = tc::to_json(und);
        } else {
            j = tc::to_json(tc::gen_spanning_tree(g.n));
        }
    } else if (g.family == "stconn") {
        j = tc::to_json(tc::gen_stconn(g.n));
    } else if (g.family == "layered-stconn") {
        j = tc::to_json(tc::gen_layered_stconn(g.n, g.d));
    } else if (g.family == "triangle") {
        j = tc::to_json(tc::gen_triangle(g.n));
    } else if (g.family == "mp") {
        tc::poly_family fam = tc::gen_mp(g.n);
        json members = json::array();
        for (const auto& [name, f] : fam.members)
            members.push_back(json{{"label", name}, {"polynomial", tc::to_json(f)}});
        j = json{{"name", fam.name}, {"members", members}};
    } else if (g.family == "conn") {
        j = tc::to_json(tc::gen_conn(g.n));
    } else if (g.family == "fg") {
        tc::require(!g.graph_path.empty(), tc::errc::usage, "fg needs --graph");
        j = tc::to_json(tc::gen_fG(tc::graph_from_json(tc::load_json_file(g.graph_path))));
    } else if (g.family == "fw") {
        j = tc::to_json(tc::build_floyd_warshall(g.n));
    } else if (g.family == "bf") {
        j = tc::to_json(tc::build_bellman_ford(g.n));
    } else if (g.family == "naive") {
        tc::require(!g.poly_path.empty(), tc::errc::usage, "naive needs --poly");
        j = tc::to_json(tc::build_naive(load_poly(g.poly_path)));
    } else if (g.family == "random-graph") {
        j = tc::to_json(tc::random_graph(g.n, g.p, g.seed));
    } else if (g.family == "random-poly") {
        j = tc::to_json(tc::random_polynomial(g.n, g.terms, g.max_deg, g.seed));
    } else {
        tc::fail(tc::errc::usage, "unknown family '" + g.family + "'");
    }
    text = j.dump(2) + "\n";
    emit(out, j, text);
    return 0;
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

json report_family_row(const std::string& family, json params, const tc::polynomial& f,
                       json upper, const tc::certificate& cert, const std::string& tag) {
    // Small budget: rows outside the oracle's reach get an explicit status.
    tc::oracle::verify_report vr = tc::oracle::verify_certificate(f, cert, {3});
    json oracle_state;
    if (vr.checkable)
        oracle_state = json{{"value", vr.oracle_value}, {"slack", vr.slack}, {"ok", vr.ok}};
    else
        oracle_state = json{{"status", "not oracle-checkable"}, {"note", vr.note}};
    return json{{"family", family}, {"params", params},   {"terms", f.term_count()},
                {"upper", upper},   {"certificate", tc::to_json(cert)}, {"oracle", oracle_state},
                {"tag", tag}};
}

int run_report(const output_options& out) {
    json families = json::array();

    // spanning trees, rooted functional encoding
    {
        tc::polynomial st4 = tc::gen_spanning_tree(4);
        tc::certificate cert = tc::rectangle_bound(st4);
        json upper{{"kind", "reachability-circuit"},
                   {"gates", tc::floyd_warshall_gate_count(4)},
                   {"note", "boolean upper bound via the all-pairs circuit"}};
        families.push_back(
            report_family_row("st", json{{"n", 4}}, st4, upper, cert, "rectangle-bound"));
    }
    // s-t connectivity: cheap min-plus circuit, exponential max-plus measure
    {
        tc::polynomial st4 = tc::gen_stconn(4);
        tc::certificate henv_cert = tc::rectangle_bound(st4.higher_envelope());
        tc::certificate maxc = tc::transfer(henv_cert, st4, tc::measure::max_size);
        json upper{{"kind", "lightest-walk-circuit"},
                   {"gates", tc::build_bellman_ford(4).size()},
                   {"measure", "min-size"}};
        families.push_back(report_family_row("stconn", json{{"n", 4}}, st4, upper, maxc,
                                             "envelope-route"));
    }
    // connectivity polynomial: not multilinear once expanded, so only the
    // produce-size rectangle bound applies directly
    {
        tc::polynomial conn3 = tc::gen_conn(3);
        tc::certificate cert = tc::rectangle_bound(conn3);
        json upper{{"kind", "all-pairs-circuit"},
                   {"gates", tc::floyd_warshall_gate_count(3)},
                   {"measure", "min-size"},
                   {"note", "boolean-equivalent to the spanning-tree polynomial"}};
        families.push_back(
            report_family_row("conn", json{{"n", 3}}, conn3, upper, cert, "rectangle-bound"));
    }
    // matrix product via its single-output triangle proxy
    {
        tc::polynomial tri2 = tc::gen_triangle(2);
        tc::certificate cert = tc::max_separated(tri2);
        tc::certificate minc = tc::transfer(cert, tri2, tc::measure::min_size);
        json upper{{"kind", "bilinear-circuit"},
                   {"gates", 2 * 8 - 4},
                   {"note", "single-output proxy for the n^2 bilinear forms"}};
        families.push_back(
            report_family_row("mp", json{{"n", 2}}, tri2, upper, minc, "separated-bound"));
    }
    // perfect matchings
    {
        tc::polynomial perm4 = tc::gen_perm(4);
        tc::certificate cert = tc::rectangle_bound(perm4);
        json upper{{"kind", "naive-circuit"}, {"gates", tc::build_naive(perm4).size()}};
        families.push_back(
            report_family_row("perm", json{{"n", 4}}, perm4, upper, cert, "rectangle-bound"));
    }
    // Hamiltonian cycles
    {
        tc::polynomial hc5 = tc::gen_hc(5);
        tc::certificate cert = tc::rectangle_bound(hc5);
        json upper{{"kind", "naive-circuit"}, {"gates", tc::build_naive(hc5).size()}};
        families.push_back(
            report_family_row("hc", json{{"n", 5}}, hc5, upper, cert, "rectangle-bound"));
    }
    // cliques
    {
        tc::polynomial cl = tc::gen_clique(5, 3);
        tc::certificate cert = tc::max_separated(cl);
        tc::certificate minc = tc::transfer(cert, cl, tc::measure::min_size);
        json upper{{"kind", "naive-circuit"}, {"gates", tc::build_naive(cl).size()}};
        families.push_back(report_family_row("clique", json{{"n", 5}, {"k", 3}}, cl, upper, minc,
                                             "separated-bound"));
    }

    json rules = json::array();
    rules.push_back(json{{"rule", "separated-bound"},
                         {"criterion", "no product of two monomials contains a third"},
                         {"instance", "triangle n=2"},
                         {"value", tc::separation_measure(tc::gen_triangle(2))}});
    {
        tc::polynomial id8(16);
        for (tc::var_t i = 0; i < 8; ++i)
            id8.add_term(tc::monomial({{i, 1}, {static_cast<tc::var_t>(8 + i), 1}}), 1);
        rules.push_back(json{{"rule", "kl-free-bound"},
                             {"criterion", "no (k+1) x (l+1) product rectangle"},
                             {"instance", "identity bilinear form n=8"},
                             {"value", tc::kl_bound(id8, 1, 1).value}});
    }
    rules.push_back(json{{"rule", "rectangle-bound"},
                         {"criterion", "factor densities over the balanced window"},
                         {"instance", "perm n=6"},
                         {"value", tc::rectangle_bound(tc::gen_perm(6)).value}});
    {
        tc::graph path5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        rules.push_back(json{{"rule", "expander-bound"},
                             {"criterion", "induced matchings across balanced partitions"},
                             {"instance", "path graph n=5"},
                             {"value", tc::expander_bound(path5).value}});
    }
    rules.push_back(json{{"rule", "depth-bound"},
                         {"criterion", "density decreases along degree sequences"},
                         {"instance", "layered stconn n=2 d=4"},
                         {"value", tc::depth_lower_bound(tc::gen_layered_stconn(2, 4)).value}});
    rules.push_back(json{{"rule", "homogeneous-equality"},
                         {"criterion", "homogeneous multilinear targets"},
                         {"instance", "clique n=5 k=3: min-size certificate equals produce-size"},
                         {"value", tc::transfer(tc::max_separated(tc::gen_clique(5, 3)),
                                                tc::gen_clique(5, 3), tc::measure::min_size)
                                       .value}});

    json j{{"families", families}, {"rules", rules}};
    std::string text = "family   params            terms  certificate  value  tag\n";
    for (const json& row : families) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-8s %-17s %5llu  %-11s %5llu  %s\n",
                      row["family"].get<std::string>().c_str(), row["params"].dump().c_str(),
                      static_cast<unsigned long long>(row["terms"].get<std::uint64_t>()),
                      row["certificate"]["kind"].get<std::string>().c_str(),
                      static_cast<unsigned long long>(row["certificate"]["value"].get<std::uint64_t>()),
                      row["tag"].get<std::string>().c_str());
        text += buf;
    }
    emit(out, j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring circuit and polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    output_options out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // gen ------------------------------------------------------------------
    gen_options g;
    CLI::App* gen = app.add_subcommand("gen", "emit a polynomial family, graph or circuit");
    gen->add_option("family", g.family,
                    "perm|hc|clique|st|stconn|layered-stconn|triangle|mp|conn|fg|fw|bf|naive|"
                    "random-graph|random-poly")
        ->required();
    gen->add_option("--n", g.n, "size parameter");
    gen->add_option("--k", g.k, "clique size");
    gen->add_option("--d", g.d, "layer count");
    gen->add_option("--p", g.p, "edge probability");
    gen->add_option("--seed", g.seed, "random seed");
    gen->add_option("--terms", g.terms, "term count");
    gen->add_option("--max-deg", g.max_deg, "maximum monomial degree");
    gen->add_option("--graph", g.graph_path, "graph JSON file");
    gen->add_option("--poly", g.poly_path, "polynomial JSON file");
    gen->add_flag("--undirected", g.undirected, "undirected edge variables (st family)");

    // eval -----------------------------------------------------------------
    std::string eval_circuit, eval_poly, eval_semiring = "min-nat", eval_assign;
    CLI::App* ev = app.add_subcommand("eval", "evaluate a circuit or polynomial");
    ev->add_option("--circuit", eval_circuit, "circuit JSON file");
    ev->add_option("--poly", eval_poly, "polynomial JSON file");
    ev->add_option("--semiring", eval_semiring, "semiring name")->capture_default_str();
    ev->add_option("--assign", eval_assign, "assignment as a JSON array")->required();

    // produce ----------------------------------------------------------------
    std::string prod_circuit;
    std::size_t prod_cap = tc::default_term_cap;
    int prod_output = -1;
    bool prod_dot = false;
    CLI::App* pr = app.add_subcommand("produce", "formal polynomial of a circuit");
    pr->add_option("--circuit", prod_circuit)->required();
    pr->add_option("--output", prod_output, "output index (default: all)");
    pr->add_option("--cap", prod_cap, "per-gate term cap");
    pr->add_flag("--dot", prod_dot, "emit the circuit in DOT format instead");

    // decompose ---------------------------------------------------------------
    std::string dec_kind, dec_circuit, dec_measure = "degree", dec_which = "lower";
    std::vector<tc::gate_id> dec_nodes;
    tc::gate_id dec_gate = 0;
    CLI::App* dec = app.add_subcommand("decompose", "structural circuit decompositions");
    dec->add_option("kind", dec_kind, "sop|split|cut|envelope")->required();
    dec->add_option("--circuit", dec_circuit)->required();
    dec->add_option("--measure", dec_measure, "degree|length (sop)");
    dec->add_option("--which", dec_which, "lower|higher (envelope)");
    dec->add_option("--gate", dec_gate, "gate id (split)");
    dec->add_option("--nodes", dec_nodes, "node cut (cut)");

    // equiv --------------------------------------------------------------------
    std::string eq_a, eq_b, eq_semiring = "min-nat";
    std::size_t eq_trials = 0;
    std::uint64_t eq_seed = 1;
    bool eq_exhaustive = false;
    CLI::App* eq = app.add_subcommand("equiv", "semantic equivalence of two polynomials");
    eq->add_option("--a", eq_a)->required();
    eq->add_option("--b", eq_b)->required();
    eq->add_option("--semiring", eq_semiring)->capture_default_str();
    eq->add_option("--trials", eq_trials, "random trials after an undecided verdict");
    eq->add_option("--seed", eq_seed);
    eq->add_flag("--exhaustive", eq_exhaustive, "sweep the default finite domain");

    // bound ----------------------------------------------------------------------
    std::string b_kind, b_poly, b_graph, b_cert, b_to = "produce-size", b_measure = "degree";
    std::uint64_t b_k = 1, b_l = 1;
    bool b_greedy = false, b_exact = false;
    CLI::App* bd = app.add_subcommand("bound", "lower-bound certificates");
    bd->add_option("kind", b_kind, "schnorr|klfree|rectangle|expander|depth|transfer")->required();
    bd->add_option("--poly", b_poly, "polynomial JSON file");
    bd->add_option("--graph", b_graph, "graph JSON file (expander)");
    bd->add_option("--cert", b_cert, "certificate JSON file (transfer)");
    bd->add_option("--to", b_to, "target measure (transfer)");
    bd->add_option("--k", b_k);
    bd->add_option("--l", b_l);
    bd->add_option("--measure", b_measure, "degree|length (rectangle)");
    bd->add_flag("--exact", b_exact, "exact separated-set search");
    bd->add_flag("--greedy", b_greedy, "greedy separated-set search");

    // oracle -------------------------------------------------------------------
    std::string o_poly, o_mode = "produce", o_semiring = "min-nat", o_cert;
    std::size_t o_max = 7;
    bool o_serial = false;
    CLI::App* orc = app.add_subcommand("oracle", "exact minimum circuit sizes by enumeration");
    orc->add_option("--poly", o_poly)->required();
    orc->add_option("--mode", o_mode, "produce|compute|verify")->capture_default_str();
    orc->add_option("--semiring", o_semiring)->capture_default_str();
    orc->add_option("--max-size", o_max)->capture_default_str();
    orc->add_option("--cert", o_cert, "certificate to verify (verify mode)");
    orc->add_flag("--serial", o_serial, "disable the parallel search");

    // axioms ----------------------------------------------------------------------
    std::string ax_semiring = "min-nat";
    CLI::App* ax = app.add_subcommand("axioms", "check the semiring axioms on samples");
    ax->add_option("--semiring", ax_semiring)->capture_default_str();

    // report ------------------------------------------------------------------
    app.add_subcommand("report", "desk-scale summary of families, bounds and certificates");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) return run_gen(g, out);

        if (ev->parsed()) {
            tc::semiring_id id = tc::semiring_from_name(eval_semiring);
            std::vector<tc::ext_int> a = parse_assignment(eval_assign);
            json j;
            if (!eval_circuit.empty()) {
                std::vector<tc::ext_int> vals = load_circuit(eval_circuit).eval(id, a);
                json arr = json::array();
                for (const tc::ext_int& v : vals) arr.push_back(tc::to_json(v));
                j = json{{"values", arr}};
            } else {
                tc::require(!eval_poly.empty(), tc::errc::usage, "eval needs --circuit or --poly");
                j = json{{"value", tc::to_json(load_poly(eval_poly).evaluate(id, a))}};
            }
            emit(out, j, j.dump() + "\n");
            return 0;
        }

        if (pr->parsed()) {
            tc::circuit c = load_circuit(prod_circuit);
            if (prod_dot) {
                std::cout << tc::to_dot(c);
                return 0;
            }
            std::vector<tc::polynomial> polys = c.produce(prod_cap);
            json j;
            std::string text;
            if (prod_output >= 0) {
                tc::require(static_cast<std::size_t>(prod_output) < polys.size(),
                            tc::errc::range, "output index out of range");
                j = tc::to_json(polys[prod_output]);
                text = poly_text(polys[prod_output]);
            } else {
                j = json::array();
                for (const tc::polynomial& f : polys) {
                    j.push_back(tc::to_json(f));
                    text += poly_text(f);
                }
            }
            emit(out, j, text);
            return 0;
        }

        if (dec->parsed()) {
            tc::circuit c = load_circuit(dec_circuit);
            json j;
            if (dec_kind == "sop") {
                auto parts = tc::sum_of_products_decompose(
                    c, dec_measure == "length" ? tc::degree_measure::length
                                               : tc::degree_measure::degree);
                json arr = json::array();
                for (const tc::sop_part& p : parts)
                    arr.push_back(json{{"gate", p.g},
                                       {"a", tc::to_json(p.a)},
                                       {"b", tc::to_json(p.b)}});
                tc::polynomial whole = c.produce_single();
                j = json{{"parts", arr}, {"part_count", parts.size()},
                         {"union_matches_production", true},
                         {"terms", whole.term_count()}};
            } else if (dec_kind == "split") {
                tc::gate_split s = tc::split_at_gate(c, dec_gate);
                j = json{{"factor", tc::to_json(s.factor)},
                         {"ext", tc::to_json(s.ext)},
                         {"rest", tc::to_json(s.rest)}};
            } else if (dec_kind == "cut") {
                auto parts = tc::cut_decompose(c, dec_nodes);
                json arr = json::array();
                for (const auto& [a, b] : parts)
                    arr.push_back(json{{"produce", tc::to_json(a)}, {"ext", tc::to_json(b)}});
                j = json{{"parts", arr}};
            } else if (dec_kind == "envelope") {
                tc::circuit e = tc::envelope_subcircuit(
                    c, dec_which == "higher" ? tc::envelope_kind::higher
                                             : tc::envelope_kind::lower);
                j = tc::to_json(e);
            } else {
                tc::fail(tc::errc::usage, "unknown decomposition '" + dec_kind + "'");
            }
            emit(out, j, j.dump(2) + "\n");
            return 0;
        }

        if (eq->parsed()) {
            tc::polynomial a = load_poly(eq_a), b = load_poly(eq_b);
            tc::semiring_id id = tc::semiring_from_name(eq_semiring);
            tc::equiv_result r = tc::decide_equivalence(a, b, id);
            json j{{"semiring", eq_semiring}};
            const char* names[] = {"equivalent", "inequivalent", "undecided"};
            j["verdict"] = names[static_cast<int>(r.v)];
            if (r.v == tc::verdict::inequivalent || r.v == tc::verdict::undecided) {
                std::optional<std::vector<tc::ext_int>> w;
                if (eq_exhaustive) w = tc::exhaustive_witness(a, b, id, tc::default_domain(id));
                if (!w && eq_trials > 0) {
                    tc::random_test_result rr = tc::random_equivalence_test(
                        a, b, id, tc::default_domain(id), eq_trials, eq_seed);
                    if (rr.v == tc::random_verdict::falsified) w = rr.witness;
                    j["trials"] = rr.trials_run;
                }
                if (w) {
                    json arr = json::array();
                    for (const tc::ext_int& v : *w) arr.push_back(tc::to_json(v));
                    j["witness"] = arr;
                    j["verdict"] = "inequivalent";
                } else if (r.v == tc::verdict::undecided) {
                    j["note"] = "no witness found; equivalence is not claimed";
                }
            }
            emit(out, j, j.dump(2) + "\n");
            return 0;
        }

        if (bd->parsed()) {
            tc::certificate cert;
            if (b_kind == "schnorr") {
                tc::require(!b_poly.empty(), tc::errc::usage, "schnorr needs --poly");
                cert = tc::max_separated(load_poly(b_poly), b_greedy ? tc::search_mode::greedy
                                                                     : tc::search_mode::exact);
            } else if (b_kind == "klfree") {
                tc::require(!b_poly.empty(), tc::errc::usage, "klfree needs --poly");
                cert = tc::kl_bound(load_poly(b_poly), b_k, b_l);
            } else if (b_kind == "rectangle") {
                tc::require(!b_poly.empty(), tc::errc::usage, "rectangle needs --poly");
                cert = tc::rectangle_bound(load_poly(b_poly),
                                           b_measure == "length" ? tc::balance_measure::length
                                                                 : tc::balance_measure::degree);
            } else if (b_kind == "expander") {
                tc::require(!b_graph.empty(), tc::errc::usage, "expander needs --graph");
                cert = tc::expander_bound(tc::graph_from_json(tc::load_json_file(b_graph)));
            } else if (b_kind == "depth") {
                tc::require(!b_poly.empty(), tc::errc::usage, "depth needs --poly");
                cert = tc::depth_lower_bound(load_poly(b_poly));
            } else if (b_kind == "transfer") {
                tc::require(!b_cert.empty() && !b_poly.empty(), tc::errc::usage,
                            "transfer needs --cert and --poly");
                cert = tc::transfer(tc::certificate_from_json(tc::load_json_file(b_cert)),
                                    load_poly(b_poly), tc::measure_from_name(b_to));
            } else {
                tc::fail(tc::errc::usage, "unknown bound '" + b_kind + "'");
            }
            json j = tc::to_json(cert);
            emit(out, j,
                 cert.kind + " certificate: " + tc::measure_name(cert.applies_to) +
                     " >= " + std::to_string(cert.value) + "\n");
            return 0;
        }

        if (orc->parsed()) {
            tc::polynomial f = load_poly(o_poly);
            tc::oracle::options opts{o_max, o_serial ? tc::exec::serial : tc::default_exec()};
            json j;
            if (o_mode == "produce") {
                tc::oracle::produce_size_result r = tc::oracle::min_produce_size(f, opts);
                j = json{{"mode", "produce"},
                         {"found", r.found},
                         {"size", r.found ? json(r.size) : json("exceeded")}};
            } else if (o_mode == "compute") {
                tc::semiring_id id = tc::semiring_from_name(o_semiring);
                tc::oracle::compute_size_result r = tc::oracle::min_compute_size(
                    f, id, tc::oracle::oracle_domain(id), opts);
                j = json{{"mode", "compute"},
                         {"semiring", o_semiring},
                         {"found", r.found},
                         {"size", r.found ? json(r.size) : json("exceeded")},
                         {"domain_relative", r.domain_relative}};
                if (r.canonical_size) j["canonical_size"] = *r.canonical_size;
            } else if (o_mode == "verify") {
                tc::require(!o_cert.empty(), tc::errc::usage, "verify needs --cert");
                tc::certificate cert =
                    tc::certificate_from_json(tc::load_json_file(o_cert));
                tc::oracle::verify_report r = tc::oracle::verify_certificate(f, cert, opts);
                j = json{{"mode", "verify"},      {"checkable", r.checkable},
                         {"ok", r.ok},            {"oracle_value", r.oracle_value},
                         {"cert_value", r.cert_value}, {"slack", r.slack},
                         {"note", r.note}};
            } else {
                tc::fail(tc::errc::usage, "unknown oracle mode '" + o_mode + "'");
            }
            emit(out, j, j.dump(2) + "\n");
            return 0;
        }

        if (ax->parsed()) {
            tc::semiring_id id = tc::semiring_from_name(ax_semiring);
            std::vector<tc::ext_int> samples;
            const auto [zero, one] = tc::sr_constants(id);
            samples.push_back(zero);
            samples.push_back(one);
            for (int v : {0, 1, 2, 3}) {
                tc::ext_int x(v);
                if (tc::in_carrier(id, x)) samples.push_back(x);
            }
            if (tc::in_carrier(id, tc::ext_int(-1))) samples.push_back(tc::ext_int(-1));
            tc::axiom_report rep = tc::axiom_suite(id, samples);
            json j{{"semiring", ax_semiring},
                   {"passed", rep.passed},
                   {"violation", rep.first_violation},
                   {"additively_idempotent_observed", rep.additive_idempotence_observed},
                   {"multiplicatively_idempotent_observed",
                    rep.multiplicative_idempotence_observed},
                   {"triples", rep.triples_checked}};
            emit(out, j, j.dump(2) + "\n");
            return 0;
        }

        return run_report(out);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const tc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
