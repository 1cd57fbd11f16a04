#pragma once

#include <string>

#include <json.hpp>

#include "tropcirc/circuit.hpp"
#include "tropcirc/generators.hpp"
#include "tropcirc/polynomial.hpp"

namespace tropcirc {

using nlohmann::json;

// Wire formats. Infinities serialize as the strings "+inf" / "-inf";
// everything else is a plain number. Polynomial terms are emitted in
// canonical (degree, lexicographic) order, so output is deterministic.
//
//   polynomial: {"n_vars": n, "terms": [{"exps": {"3": 2, "7": 1}, "coeff": 1}, ...]}
//   circuit:    {"n_vars": n, "gates": [{"op": "var", "i": 0} | {"op": "zero"}
//                | {"op": "one"} | {"op": "sum", "l": a, "r": b}
//                | {"op": "prod", "l": a, "r": b}], "outputs": [ids]}
//   graph:      {"n": n, "edges": [[u, v], ...]}

json to_json(const ext_int& x);
ext_int ext_int_from_json(const json& j);

json to_json(const monomial& m);
monomial monomial_from_json(const json& j);

json to_json(const polynomial& f);
polynomial polynomial_from_json(const json& j);

json to_json(const circuit& c);
circuit circuit_from_json(const json& j);

json to_json(const graph& g);
graph graph_from_json(const json& j);

/// Graphviz rendering: sum gates as ellipses, product gates as boxes,
/// output gates double-bordered.
std::string to_dot(const circuit& c);

json load_json_file(const std::string& path);

}  // namespace tropcirc
