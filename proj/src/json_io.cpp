#include "tropcirc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tropcirc {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::usage, "malformed JSON: " + what); }

}  // namespace

json to_json(const ext_int& x) {
    if (x.is_pos_inf()) return json("+inf");
    if (x.is_neg_inf()) return json("-inf");
    return json(x.value());
}

ext_int ext_int_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "+inf" || s == "inf") return ext_int::pos_inf();
        if (s == "-inf") return ext_int::neg_inf();
        bad("expected a number, \"+inf\" or \"-inf\", got \"" + s + "\"");
    }
    if (!j.is_number_integer()) bad("expected an integer value");
    return ext_int(j.get<std::int64_t>());
}

json to_json(const monomial& m) {
    json exps = json::object();
    for (const auto& [v, e] : m.entries()) exps[std::to_string(v)] = e;
    return json{{"exps", exps}};
}

monomial monomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("exps") || !j["exps"].is_object())
        bad("monomial needs an \"exps\" object");
    std::vector<std::pair<var_t, exp_t>> es;
    for (const auto& [key, val] : j["exps"].items()) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(key, &pos);
        } catch (const std::exception&) {
            bad("variable key \"" + key + "\" is not a decimal index");
        }
        if (pos != key.size()) bad("variable key \"" + key + "\" is not a decimal index");
        if (!val.is_number_unsigned() || val.get<std::uint64_t>() == 0)
            bad("exponent of x" + key + " must be a positive integer");
        es.emplace_back(static_cast<var_t>(v), val.get<exp_t>());
    }
    return monomial(es);
}

json to_json(const polynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json t = to_json(m);
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    return json{{"n_vars", f.n_vars()}, {"terms", terms}};
}

polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_vars") || !j.contains("terms")) bad("polynomial needs n_vars and terms");
    polynomial f(j["n_vars"].get<std::uint32_t>());
    for (const json& t : j["terms"]) {
        coeff_t c = 1;
        if (t.contains("coeff")) {
            if (!t["coeff"].is_number_unsigned() || t["coeff"].get<std::uint64_t>() == 0)
                bad("coefficient must be a positive integer");
            c = t["coeff"].get<coeff_t>();
        }
        f.add_term(monomial_from_json(t), c);
    }
    return f;
}

json to_json(const circuit& c) {
    json gates = json::array();
    for (const gate& g : c.gates()) {
        switch (g.op) {
            case gate::kind::var: gates.push_back(json{{"op", "var"}, {"i", g.var_index}}); break;
            case gate::kind::const_zero: gates.push_back(json{{"op", "zero"}}); break;
            case gate::kind::const_one: gates.push_back(json{{"op", "one"}}); break;
            case gate::kind::sum:
                gates.push_back(json{{"op", "sum"}, {"l", g.lhs}, {"r", g.rhs}});
                break;
            case gate::kind::prod:
                gates.push_back(json{{"op", "prod"}, {"l", g.lhs}, {"r", g.rhs}});
                break;
        }
    }
    return json{{"n_vars", c.n_vars()}, {"gates", gates}, {"outputs", c.outputs()}};
}

circuit circuit_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_vars") || !j.contains("gates") || !j.contains("outputs"))
        bad("circuit needs n_vars, gates and outputs");
    circuit c(j["n_vars"].get<std::uint32_t>());
    for (const json& g : j["gates"]) {
        std::string op = g.value("op", "");
        try {
            if (op == "var")
                c.add_var(g.at("i").get<var_t>());
            else if (op == "zero")
                c.add_zero();
            else if (op == "one")
                c.add_one();
            else if (op == "sum")
                c.add_sum(g.at("l").get<gate_id>(), g.at("r").get<gate_id>());
            else if (op == "prod")
                c.add_prod(g.at("l").get<gate_id>(), g.at("r").get<gate_id>());
            else
                bad("unknown gate op \"" + op + "\"");
        } catch (const json::exception& e) {
            bad(std::string("gate: ") + e.what());
        }
    }
    c.set_outputs(j["outputs"].get<std::vector<gate_id>>());
    auto violations = c.validate();
    if (!violations.empty()) bad("invalid circuit: " + violations.front());
    return c;
}

json to_json(const graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) bad("graph needs n and edges");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
        edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return graph(j["n"].get<std::uint32_t>(), std::move(edges));
}

std::string to_dot(const circuit& c) {
    std::ostringstream os;
    os << "digraph circuit {\n";
    std::vector<bool> is_out(c.node_count(), false);
    for (gate_id o : c.outputs()) is_out[o] = true;
    for (gate_id i = 0; i < c.node_count(); ++i) {
        const gate& g = c.gates()[i];
        std::string label, shape;
        switch (g.op) {
            case gate::kind::var:
                label = "x" + std::to_string(g.var_index);
                shape = "plaintext";
                break;
            case gate::kind::const_zero: label = "0", shape = "plaintext"; break;
            case gate::kind::const_one: label = "1", shape = "plaintext"; break;
            case gate::kind::sum: label = "\xE2\x8A\x95", shape = "ellipse"; break;
            case gate::kind::prod: label = "\xE2\x8A\x97", shape = "box"; break;
        }
        os << "  n" << i << " [label=\"" << label << "\", shape=" << shape;
        if (is_out[i]) os << ", peripheries=2";
        os << "];\n";
        if (g.is_op())
            os << "  n" << g.lhs << " -> n" << i << ";\n  n" << g.rhs << " -> n" << i << ";\n";
    }
    os << "}\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::usage, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad(path + ": " + e.what());
    }
    return j;
}

}  // namespace tropcirc
