#include "graphlie/json_io.hpp"

#include <fstream>
#include <sstream>

namespace graphlie {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int require_int(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    throw InputError(where + ": \"" + key + "\" must be an integer");
  }
  return it->get<int>();
}

json edges_to_json_undirected(const std::vector<ColoredEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) {
    out.push_back({{"u", e.u}, {"v", e.v}, {"color", e.color}});
  }
  return out;
}

}  // namespace

json graph_to_json(const EdgeColoredGraph& g) {
  return {{"directed", false},
          {"n_vertices", g.n_vertices()},
          {"n_colors", g.n_colors()},
          {"edges", edges_to_json_undirected(g.edges())}};
}

json graph_to_json(const DirectedEdgeColoredGraph& h) {
  json edges = json::array();
  for (const auto& a : h.arcs()) {
    edges.push_back({{"u", a.from}, {"v", a.to}, {"color", a.color}});
  }
  return {{"directed", true},
          {"n_vertices", h.n_vertices()},
          {"n_colors", h.n_colors()},
          {"edges", edges}};
}

AnyGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph document must be a JSON object");
  const json& directed_field = require_field(j, "directed");
  if (!directed_field.is_boolean()) throw InputError("\"directed\" must be a boolean");
  const bool directed = directed_field.get<bool>();
  const int n_vertices = require_int(j, "n_vertices", "graph");
  const int n_colors = require_int(j, "n_colors", "graph");
  const json& edges_field = require_field(j, "edges");
  if (!edges_field.is_array()) throw InputError("\"edges\" must be an array");

  if (directed) {
    std::vector<ColoredArc> arcs;
    arcs.reserve(edges_field.size());
    for (std::size_t idx = 0; idx < edges_field.size(); ++idx) {
      const std::string where = "edge " + std::to_string(idx);
      const json& e = edges_field[idx];
      if (!e.is_object()) throw InputError(where + ": must be an object");
      arcs.push_back({require_int(e, "u", where), require_int(e, "v", where),
                      require_int(e, "color", where)});
    }
    return DirectedEdgeColoredGraph(n_vertices, n_colors, std::move(arcs));
  }
  std::vector<ColoredEdge> edges;
  edges.reserve(edges_field.size());
  for (std::size_t idx = 0; idx < edges_field.size(); ++idx) {
    const std::string where = "edge " + std::to_string(idx);
    const json& e = edges_field[idx];
    if (!e.is_object()) throw InputError(where + ": must be an object");
    edges.push_back({require_int(e, "u", where), require_int(e, "v", where),
                     require_int(e, "color", where)});
  }
  return EdgeColoredGraph(n_vertices, n_colors, std::move(edges));
}

AnyGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }
  return graph_from_json(j);
}

namespace {

void append_dot_edge(std::string& out, int a, int b, ColorId color, const char* connector) {
  out += "  " + std::to_string(a) + connector + std::to_string(b) + " [color=\"c" +
         std::to_string(color) + "\", label=\"Z_" + std::to_string(color) + "\"];\n";
}

}  // namespace

std::string graph_to_dot(const EdgeColoredGraph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < g.n_vertices(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges()) append_dot_edge(out, e.u, e.v, e.color, " -- ");
  out += "}\n";
  return out;
}

std::string graph_to_dot(const DirectedEdgeColoredGraph& h, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int v = 0; v < h.n_vertices(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& a : h.arcs()) append_dot_edge(out, a.from, a.to, a.color, " -> ");
  out += "}\n";
  return out;
}

json permutation_to_json(const Permutation& p) { return json(p.images()); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw InputError("permutation must be a JSON array of integers");
  std::vector<int> images;
  images.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("permutation entries must be integers");
    images.push_back(x.get<int>());
  }
  return Permutation(std::move(images));
}

json cpa_witness_to_json(const Permutation& sigma, const Permutation& phi) {
  return {{"sigma", sigma.images()}, {"phi", phi.images()}};
}

json gla_witness_to_json(const Permutation& sigma, const SignedColorPermutation& phi) {
  json entries = json::array();
  for (const auto& sc : phi.images()) {
    entries.push_back({{"color", sc.color}, {"sign", sc.sign}});
  }
  return {{"sigma", sigma.images()}, {"phi", entries}};
}

json group_to_json(const PermutationGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

PermutationGroup group_from_json(const json& j) {
  if (!j.is_object()) throw InputError("group document must be a JSON object");
  const int degree = require_int(j, "degree", "group");
  const json& gens_field = require_field(j, "generators");
  if (!gens_field.is_array()) throw InputError("\"generators\" must be an array");
  std::vector<Permutation> gens;
  for (const auto& g : gens_field) gens.push_back(permutation_from_json(g));
  auto group = PermutationGroup::closure(gens, degree);
  const json& order_field = require_field(j, "order");
  if (!order_field.is_number_integer() ||
      order_field.get<long long>() != static_cast<long long>(group.order())) {
    throw InputError("group order field does not match the closure of the generators");
  }
  return group;
}

json identification_to_json(const GroupIdentification& ident) {
  return {{"kind", kind_name(ident.kind)},
          {"parameter", ident.parameter},
          {"verified", ident.verified}};
}

json algebra_to_json(const LieAlgebra2Step& alg) {
  json brackets = json::array();
  for (const auto& [pair, value] : alg.bracket_table()) {
    json entries = json::array();
    for (int w = 0; w < alg.dim_w(); ++w) {
      const Rat& c = value[alg.dim_v() + w];
      if (c == Rat(0)) continue;
      entries.push_back({{"w", w}, {"num", c.numerator()}, {"den", c.denominator()}});
    }
    brackets.push_back({{"i", pair.first}, {"j", pair.second}, {"value", entries}});
  }
  return {{"dim_v", alg.dim_v()}, {"dim_w", alg.dim_w()}, {"brackets", brackets}};
}

LieAlgebra2Step algebra_from_json(const json& j) {
  if (!j.is_object()) throw InputError("algebra document must be a JSON object");
  const int dim_v = require_int(j, "dim_v", "algebra");
  const int dim_w = require_int(j, "dim_w", "algebra");
  const json& brackets = require_field(j, "brackets");
  if (!brackets.is_array()) throw InputError("\"brackets\" must be an array");
  LieAlgebra2Step::Table table;
  for (std::size_t idx = 0; idx < brackets.size(); ++idx) {
    const std::string where = "bracket " + std::to_string(idx);
    const json& entry = brackets[idx];
    const int i = require_int(entry, "i", where);
    const int k = require_int(entry, "j", where);
    if (i >= k) throw InputError(where + ": requires i < j");
    const json& value_field = require_field(entry, "value");
    if (!value_field.is_array()) throw InputError(where + ": \"value\" must be an array");
    AlgebraVector value = AlgebraVector::zero(dim_v + dim_w);
    for (const auto& term : value_field) {
      const int w = require_int(term, "w", where);
      const long long num = require_int(term, "num", where);
      const long long den = require_int(term, "den", where);
      if (den == 0) throw InputError(where + ": zero denominator");
      if (w < 0 || w >= dim_w) throw InputError(where + ": W index out of range");
      value[dim_v + w] = Rat(num, den);
    }
    if (!table.emplace(std::make_pair(i, k), std::move(value)).second) {
      throw InputError(where + ": duplicate bracket key");
    }
  }
  return LieAlgebra2Step(dim_v, dim_w, std::move(table));
}

json linear_map_to_json(const LinearMap& m) {
  json out = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      out.push_back({{"num", m.at(r, c).numerator()}, {"den", m.at(r, c).denominator()}});
    }
  }
  return out;
}

json check_items_to_json(const std::vector<CheckItem>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return out;
}

json lemma_report_to_json(const LemmaReport& report) {
  return {{"n", report.n},
          {"all_pass", report.all_pass},
          {"checks", check_items_to_json(report.checks)}};
}

}  // namespace graphlie
