#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "graphlie/json_io.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/report.hpp"

namespace py = pybind11;
using namespace graphlie;

namespace {

using EdgeTuple = std::tuple<int, int, int>;
using RatPair = std::pair<long long, long long>;

EdgeColoredGraph make_undirected(int n_vertices, int n_colors,
                                 const std::vector<EdgeTuple>& edges) {
  std::vector<ColoredEdge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v, color] : edges) converted.push_back({u, v, color});
  return EdgeColoredGraph(n_vertices, n_colors, std::move(converted));
}

DirectedEdgeColoredGraph make_directed(int n_vertices, int n_colors,
                                       const std::vector<EdgeTuple>& edges) {
  std::vector<ColoredArc> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v, color] : edges) converted.push_back({u, v, color});
  return DirectedEdgeColoredGraph(n_vertices, n_colors, std::move(converted));
}

std::vector<EdgeTuple> edge_tuples(const EdgeColoredGraph& g) {
  std::vector<EdgeTuple> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.color);
  return out;
}

std::vector<EdgeTuple> arc_tuples(const DirectedEdgeColoredGraph& h) {
  std::vector<EdgeTuple> out;
  for (const auto& a : h.arcs()) out.emplace_back(a.from, a.to, a.color);
  return out;
}

SignedColorPermutation phi_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<SignedColor> images;
  images.reserve(pairs.size());
  for (const auto& [color, sign] : pairs) images.push_back({color, sign});
  return SignedColorPermutation(std::move(images));
}

std::vector<std::pair<int, int>> phi_to_pairs(const SignedColorPermutation& phi) {
  std::vector<std::pair<int, int>> out;
  for (const auto& sc : phi.images()) out.emplace_back(sc.color, sc.sign);
  return out;
}

AlgebraVector vector_from_pairs(const std::vector<RatPair>& pairs) {
  AlgebraVector v = AlgebraVector::zero(static_cast<int>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    v[static_cast<int>(i)] = Rat(pairs[i].first, pairs[i].second);
  }
  return v;
}

std::vector<RatPair> vector_to_pairs(const AlgebraVector& v) {
  std::vector<RatPair> out;
  for (int i = 0; i < v.dim(); ++i) out.emplace_back(v[i].numerator(), v[i].denominator());
  return out;
}

py::dict identification_dict(const GroupIdentification& ident) {
  py::dict out;
  out["kind"] = kind_name(ident.kind);
  out["parameter"] = ident.parameter;
  out["verified"] = ident.verified;
  return out;
}

std::optional<GroupKind> kind_from_name(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "cyclic") return GroupKind::Cyclic;
  if (name == "dihedral") return GroupKind::Dihedral;
  if (name == "holomorph") return GroupKind::Holomorph;
  throw InputError("unknown group kind '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_graphlie, m) {
  m.doc() = "Edge-colored graph symmetry groups and 2-step nilpotent Lie algebras";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CheckError>(m, "CheckError", PyExc_RuntimeError);

  py::class_<EdgeColoredGraph>(m, "EdgeColoredGraph")
      .def(py::init(&make_undirected), py::arg("n_vertices"), py::arg("n_colors"),
           py::arg("edges"))
      .def_property_readonly("n_vertices", &EdgeColoredGraph::n_vertices)
      .def_property_readonly("n_colors", &EdgeColoredGraph::n_colors)
      .def_property_readonly("edges", &edge_tuples)
      .def("color_of", &EdgeColoredGraph::color_of, py::arg("u"), py::arg("v"))
      .def("is_complete", &EdgeColoredGraph::is_complete)
      .def("__eq__", [](const EdgeColoredGraph& a, const EdgeColoredGraph& b) { return a == b; })
      .def("__repr__", [](const EdgeColoredGraph& g) {
        return "EdgeColoredGraph(n_vertices=" + std::to_string(g.n_vertices()) +
               ", n_colors=" + std::to_string(g.n_colors()) + ", edges=" +
               std::to_string(g.edges().size()) + ")";
      });

  py::class_<DirectedEdgeColoredGraph>(m, "DirectedEdgeColoredGraph")
      .def(py::init(&make_directed), py::arg("n_vertices"), py::arg("n_colors"), py::arg("edges"))
      .def_property_readonly("n_vertices", &DirectedEdgeColoredGraph::n_vertices)
      .def_property_readonly("n_colors", &DirectedEdgeColoredGraph::n_colors)
      .def_property_readonly("edges", &arc_tuples)
      .def("color_of", &DirectedEdgeColoredGraph::color_of, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const DirectedEdgeColoredGraph& a, const DirectedEdgeColoredGraph& b) {
        return a == b;
      })
      .def("__repr__", [](const DirectedEdgeColoredGraph& h) {
        return "DirectedEdgeColoredGraph(n_vertices=" + std::to_string(h.n_vertices()) +
               ", n_colors=" + std::to_string(h.n_colors()) + ", edges=" +
               std::to_string(h.arcs().size()) + ")";
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("degree"))
      .def_property_readonly("images", &Permutation::images)
      .def_property_readonly("degree", &Permutation::degree)
      .def("__call__", [](const Permutation& p, int x) { return p(x); })
      .def("compose", &Permutation::compose)
      .def("inverse", &Permutation::inverse)
      .def("order", &Permutation::order)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__",
           [](const Permutation& p) { return py::hash(py::tuple(py::cast(p.images()))); })
      .def("__repr__", [](const Permutation& p) { return "Permutation " + cycle_string(p); });

  py::class_<PermutationGroup>(m, "PermutationGroup")
      .def_property_readonly("degree", &PermutationGroup::degree)
      .def_property_readonly("order", &PermutationGroup::order)
      .def_property_readonly("elements", &PermutationGroup::elements)
      .def_property_readonly("generators", &PermutationGroup::generators)
      .def("contains", &PermutationGroup::contains)
      .def("orbit", &PermutationGroup::orbit, py::arg("point"))
      .def("stabilizer", &PermutationGroup::stabilizer, py::arg("point"))
      .def("__len__", &PermutationGroup::order)
      .def("__eq__",
           [](const PermutationGroup& a, const PermutationGroup& b) { return a == b; })
      .def("__repr__", [](const PermutationGroup& g) {
        return "PermutationGroup(degree=" + std::to_string(g.degree()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  py::class_<LieAlgebra2Step>(m, "LieAlgebra2Step")
      .def_property_readonly("dim_v", &LieAlgebra2Step::dim_v)
      .def_property_readonly("dim_w", &LieAlgebra2Step::dim_w)
      .def_property_readonly("dimension", &LieAlgebra2Step::dimension)
      .def("bracket",
           [](const LieAlgebra2Step& alg, const std::vector<RatPair>& x,
              const std::vector<RatPair>& y) {
             return vector_to_pairs(alg.bracket(vector_from_pairs(x), vector_from_pairs(y)));
           })
      .def("__repr__", [](const LieAlgebra2Step& alg) {
        return "LieAlgebra2Step(dim_v=" + std::to_string(alg.dim_v()) +
               ", dim_w=" + std::to_string(alg.dim_w()) + ")";
      });

  py::class_<LinearMap>(m, "LinearMap")
      .def_property_readonly("dim", &LinearMap::dim)
      .def("rank", &LinearMap::rank)
      .def("rows",
           [](const LinearMap& map) {
             std::vector<std::vector<RatPair>> out;
             for (int r = 0; r < map.dim(); ++r) {
               std::vector<RatPair> row;
               for (int c = 0; c < map.dim(); ++c) {
                 row.emplace_back(map.at(r, c).numerator(), map.at(r, c).denominator());
               }
               out.push_back(std::move(row));
             }
             return out;
           })
      .def("__mul__", [](const LinearMap& a, const LinearMap& b) { return a * b; })
      .def("__eq__", [](const LinearMap& a, const LinearMap& b) { return a == b; })
      .def("__repr__",
           [](const LinearMap& map) { return "LinearMap(dim=" + std::to_string(map.dim()) + ")"; });

  // Graph construction and inspection.
  m.def("build_gn", &build_gn, py::arg("n"));
  m.def("build_hn", &build_hn, py::arg("n"));
  m.def("underlying_undirected", &underlying_undirected, py::arg("graph"));
  m.def(
      "is_uniform",
      [](const EdgeColoredGraph& g) {
        const auto res = is_uniform(g);
        return std::make_pair(
            res.uniform,
            res.witness ? std::optional<std::string>(res.witness->describe()) : std::nullopt);
      },
      py::arg("graph"), "Returns (uniform, witness_description_or_None)");
  m.def(
      "color_classes",
      [](const EdgeColoredGraph& g) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& cls : color_classes(g)) {
          std::vector<std::pair<int, int>> converted;
          for (const auto& e : cls) converted.emplace_back(e.u, e.v);
          out.push_back(std::move(converted));
        }
        return out;
      },
      py::arg("graph"));

  // Symmetry predicates and witnesses.
  m.def("is_graph_automorphism", &is_graph_automorphism, py::arg("sigma"), py::arg("graph"));
  m.def("color_permutation_witness", &color_permutation_witness, py::arg("sigma"),
        py::arg("graph"));
  m.def("is_special", &is_special, py::arg("tau"));
  m.def(
      "affine_witness",
      [](const Permutation& f) -> std::optional<std::pair<int, int>> {
        const auto w = affine_witness(f);
        if (!w) return std::nullopt;
        return std::make_pair(w->translation, w->unit);
      },
      py::arg("f"), "Returns (translation, unit) or None");
  m.def(
      "gla_witness",
      [](const Permutation& chi,
         const DirectedEdgeColoredGraph& h) -> std::optional<std::vector<std::pair<int, int>>> {
        const auto phi = gla_witness(chi, h);
        if (!phi) return std::nullopt;
        return phi_to_pairs(*phi);
      },
      py::arg("chi"), py::arg("graph"), "Returns [(color, sign), ...] or None");

  // Enumeration.
  m.def(
      "enumerate_cpa",
      [](const EdgeColoredGraph& g, const std::string& method, int cap) {
        return enumerate_cpa(g, parse_method(method), cap);
      },
      py::arg("graph"), py::arg("method") = "brute", py::arg("cap") = kDefaultBruteCap);
  m.def(
      "enumerate_gla",
      [](const DirectedEdgeColoredGraph& h, const std::string& method, int cap) {
        return enumerate_gla(h, parse_method(method), cap);
      },
      py::arg("graph"), py::arg("method") = "brute", py::arg("cap") = kDefaultBruteCap);
  m.def(
      "half_split",
      [](int n) {
        const auto split = half_split(n);
        return std::make_pair(split.right, split.left);
      },
      py::arg("n"));
  m.def(
      "verify_stabilizer_lemmas",
      [](int n, int cap) {
        const auto report = verify_stabilizer_lemmas(n, cap);
        py::list checks;
        for (const auto& item : report.checks) {
          py::dict d;
          d["name"] = item.name;
          d["pass"] = item.pass;
          d["detail"] = item.detail;
          checks.append(d);
        }
        py::dict out;
        out["n"] = report.n;
        out["all_pass"] = report.all_pass;
        out["checks"] = checks;
        return out;
      },
      py::arg("n"), py::arg("cap") = kDefaultBruteCap);

  // Groups.
  m.def(
      "closure",
      [](const std::vector<Permutation>& generators, int degree) {
        return PermutationGroup::closure(generators, degree);
      },
      py::arg("generators"), py::arg("degree"));
  m.def("build_cyclic", &build_cyclic, py::arg("n"));
  m.def("build_dihedral", &build_dihedral, py::arg("n"));
  m.def("build_holomorph", &build_holomorph, py::arg("n"));
  m.def(
      "is_isomorphic",
      [](const PermutationGroup& a, const PermutationGroup& b) -> std::optional<std::vector<int>> {
        const auto iso = is_isomorphic(a, b);
        if (!iso) return std::nullopt;
        return iso->image_of;
      },
      py::arg("a"), py::arg("b"), "Returns the element-index mapping onto b, or None");
  m.def(
      "identify",
      [](const PermutationGroup& g, const std::string& prefer) {
        return identification_dict(identify(g, kind_from_name(prefer)));
      },
      py::arg("group"), py::arg("prefer") = "");

  // Lie layer.
  m.def("from_graph", &LieAlgebra2Step::from_graph, py::arg("graph"));
  m.def("check_two_step", &check_two_step, py::arg("algebra"));
  m.def("check_jacobi", &check_jacobi, py::arg("algebra"));
  m.def("derived_subalgebra", &derived_subalgebra, py::arg("algebra"));
  m.def(
      "extend_gla",
      [](const Permutation& chi, const std::vector<std::pair<int, int>>& phi,
         const LieAlgebra2Step& alg) { return extend_gla(chi, phi_from_pairs(phi), alg); },
      py::arg("chi"), py::arg("phi"), py::arg("algebra"));
  m.def("is_lie_automorphism", &is_lie_automorphism, py::arg("map"), py::arg("algebra"));
  m.def("gla_image_group", &gla_image_group, py::arg("graph"), py::arg("cap") = kDefaultBruteCap);

  // Serialization.
  m.def("to_json", [](const EdgeColoredGraph& g) { return graph_to_json(g).dump(); });
  m.def("to_json", [](const DirectedEdgeColoredGraph& h) { return graph_to_json(h).dump(); });
  m.def("parse_graph", [](const std::string& text) -> py::object {
    const auto any = graph_from_json(nlohmann::json::parse(text));
    if (const auto* g = std::get_if<EdgeColoredGraph>(&any)) return py::cast(*g);
    return py::cast(std::get<DirectedEdgeColoredGraph>(any));
  });
  m.def(
      "to_dot",
      [](const EdgeColoredGraph& g, const std::string& name) { return graph_to_dot(g, name); },
      py::arg("graph"), py::arg("name") = "G");
  m.def(
      "to_dot",
      [](const DirectedEdgeColoredGraph& h, const std::string& name) {
        return graph_to_dot(h, name);
      },
      py::arg("graph"), py::arg("name") = "H");

  // Full pipeline.
  m.def(
      "verify_report",
      [](int n, const std::string& method, int cap, bool timing) {
        return run_verify({n, parse_method(method), cap, timing}).dump();
      },
      py::arg("n"), py::arg("method") = "both", py::arg("cap") = kDefaultBruteCap,
      py::arg("timing") = false, "Runs the verification pipeline, returns the JSON report");

  m.attr("__version__") = "0.1.0";
}
