#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "graphlie/automorphism.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/group.hpp"
#include "graphlie/lie.hpp"

namespace graphlie {

using AnyGraph = std::variant<EdgeColoredGraph, DirectedEdgeColoredGraph>;

// Graph format:
// {"directed": bool, "n_vertices": int, "n_colors": int,
//  "edges": [{"u": int, "v": int, "color": int}, ...]}
// For directed graphs u -> v is the orientation.
nlohmann::json graph_to_json(const EdgeColoredGraph& g);
nlohmann::json graph_to_json(const DirectedEdgeColoredGraph& h);
AnyGraph graph_from_json(const nlohmann::json& j);
AnyGraph load_graph_file(const std::string& path);

// DOT export; each edge carries color="cK" and label="Z_K".
std::string graph_to_dot(const EdgeColoredGraph& g, const std::string& name = "G");
std::string graph_to_dot(const DirectedEdgeColoredGraph& h, const std::string& name = "H");

nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

// {"sigma": [...], "phi": [...]} for color witnesses; the signed variant
// stores phi entries as {"color": int, "sign": 1|-1}.
nlohmann::json cpa_witness_to_json(const Permutation& sigma, const Permutation& phi);
nlohmann::json gla_witness_to_json(const Permutation& sigma, const SignedColorPermutation& phi);

// {"degree": int, "generators": [[...], ...], "order": int}; elements are
// rebuilt by closure on load and the order field is validated.
nlohmann::json group_to_json(const PermutationGroup& g);
PermutationGroup group_from_json(const nlohmann::json& j);

// {"kind": "cyclic"|"dihedral"|"holomorph"|"other", "parameter": int,
//  "verified": bool}
nlohmann::json identification_to_json(const GroupIdentification& ident);

// {"dim_v": int, "dim_w": int,
//  "brackets": [{"i": int, "j": int, "value": [{"w": int, "num": int, "den": int}]}]}
nlohmann::json algebra_to_json(const LieAlgebra2Step& alg);
LieAlgebra2Step algebra_from_json(const nlohmann::json& j);

// Row-major array of {"num": int, "den": int}.
nlohmann::json linear_map_to_json(const LinearMap& m);

nlohmann::json check_items_to_json(const std::vector<CheckItem>& checks);
nlohmann::json lemma_report_to_json(const LemmaReport& report);

}  // namespace graphlie
