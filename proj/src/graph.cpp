#include "graphlie/graph.hpp"

#include <algorithm>
#include <utility>

namespace graphlie {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

void require_odd(int n) {
  if (n < 3 || n % 2 == 0) {
    throw InputError("odd order required, n >= 3 (got n = " + std::to_string(n) + ")");
  }
}

std::string edge_msg(std::size_t idx, const std::string& what) {
  return "edge " + std::to_string(idx) + ": " + what;
}

void check_endpoint(std::size_t idx, Vertex x, int n_vertices) {
  if (x < 0 || x >= n_vertices) {
    throw InputError(edge_msg(idx, "vertex " + std::to_string(x) + " out of range [0, " +
                                       std::to_string(n_vertices) + ")"));
  }
}

void check_color(std::size_t idx, ColorId c, int n_colors) {
  if (c < 0 || c >= n_colors) {
    throw InputError(edge_msg(idx, "color " + std::to_string(c) + " out of range [0, " +
                                       std::to_string(n_colors) + ")"));
  }
}

void check_surjective(const std::vector<char>& seen) {
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (!seen[c]) {
      throw InputError("color " + std::to_string(c) + " is unused (coloring must be surjective)");
    }
  }
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(int n_vertices, int n_colors, std::vector<ColoredEdge> edges)
    : n_vertices_(n_vertices), n_colors_(n_colors) {
  if (n_vertices <= 0) throw InputError("n_vertices must be positive");
  if (n_colors <= 0) throw InputError("n_colors must be positive");

  color_matrix_.assign(static_cast<std::size_t>(n_vertices) * n_vertices, -1);
  std::vector<char> color_seen(n_colors, 0);

  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    auto& e = edges[idx];
    check_endpoint(idx, e.u, n_vertices);
    check_endpoint(idx, e.v, n_vertices);
    if (e.u == e.v) throw InputError(edge_msg(idx, "loops are not allowed"));
    check_color(idx, e.color, n_colors);
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& cell = color_matrix_[static_cast<std::size_t>(e.u) * n_vertices + e.v];
    if (cell != -1) {
      throw InputError(edge_msg(idx, "duplicate edge {" + std::to_string(e.u) + ", " +
                                         std::to_string(e.v) + "}"));
    }
    cell = e.color;
    color_matrix_[static_cast<std::size_t>(e.v) * n_vertices + e.u] = e.color;
    color_seen[e.color] = 1;
  }
  check_surjective(color_seen);

  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

std::optional<ColorId> EdgeColoredGraph::color_of(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_vertices_ || b >= n_vertices_ || a == b) return std::nullopt;
  int c = color_matrix_[static_cast<std::size_t>(a) * n_vertices_ + b];
  if (c == -1) return std::nullopt;
  return c;
}

bool EdgeColoredGraph::is_complete() const {
  auto n = static_cast<std::size_t>(n_vertices_);
  return edges_.size() == n * (n - 1) / 2;
}

DirectedEdgeColoredGraph::DirectedEdgeColoredGraph(int n_vertices, int n_colors,
                                                   std::vector<ColoredArc> arcs)
    : n_vertices_(n_vertices), n_colors_(n_colors) {
  if (n_vertices <= 0) throw InputError("n_vertices must be positive");
  if (n_colors <= 0) throw InputError("n_colors must be positive");

  arc_matrix_.assign(static_cast<std::size_t>(n_vertices) * n_vertices, -1);
  std::vector<char> color_seen(n_colors, 0);

  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    const auto& a = arcs[idx];
    check_endpoint(idx, a.from, n_vertices);
    check_endpoint(idx, a.to, n_vertices);
    if (a.from == a.to) throw InputError(edge_msg(idx, "loops are not allowed"));
    check_color(idx, a.color, n_colors);
    if (arc_matrix_[static_cast<std::size_t>(a.from) * n_vertices + a.to] != -1 ||
        arc_matrix_[static_cast<std::size_t>(a.to) * n_vertices + a.from] != -1) {
      throw InputError(edge_msg(idx, "pair {" + std::to_string(a.from) + ", " +
                                         std::to_string(a.to) + "} already carries an arc"));
    }
    arc_matrix_[static_cast<std::size_t>(a.from) * n_vertices + a.to] = a.color;
    color_seen[a.color] = 1;
  }
  check_surjective(color_seen);

  std::sort(arcs.begin(), arcs.end());
  arcs_ = std::move(arcs);
}

std::optional<ColorId> DirectedEdgeColoredGraph::color_of(Vertex from, Vertex to) const {
  if (from < 0 || to < 0 || from >= n_vertices_ || to >= n_vertices_ || from == to) {
    return std::nullopt;
  }
  int c = arc_matrix_[static_cast<std::size_t>(from) * n_vertices_ + to];
  if (c == -1) return std::nullopt;
  return c;
}

std::optional<ColoredArc> DirectedEdgeColoredGraph::arc_covering(Vertex a, Vertex b) const {
  if (auto c = color_of(a, b)) return ColoredArc{a, b, *c};
  if (auto c = color_of(b, a)) return ColoredArc{b, a, *c};
  return std::nullopt;
}

EdgeColoredGraph build_gn(int n) {
  require_odd(n);
  std::vector<ColoredEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j, (i + j) % n});
    }
  }
  return EdgeColoredGraph(n, n, std::move(edges));
}

DirectedEdgeColoredGraph build_hn(int n) {
  require_odd(n);
  std::vector<ColoredArc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int m = 0; m < n; ++m) {
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      int from = mod(m + i, n);
      int to = mod(m - i, n);
      arcs.push_back({from, to, (from + to) % n});
    }
  }
  return DirectedEdgeColoredGraph(n, n, std::move(arcs));
}

EdgeColoredGraph underlying_undirected(const DirectedEdgeColoredGraph& h) {
  std::vector<ColoredEdge> edges;
  edges.reserve(h.arcs().size());
  for (const auto& a : h.arcs()) {
    edges.push_back({a.from, a.to, a.color});
  }
  return EdgeColoredGraph(h.n_vertices(), h.n_colors(), std::move(edges));
}

std::string UniformityWitness::describe() const {
  if (kind == Kind::IncidentSameColor) {
    return "edges {" + std::to_string(first.u) + ", " + std::to_string(first.v) + "} and {" +
           std::to_string(second.u) + ", " + std::to_string(second.v) + "} share color " +
           std::to_string(first.color) + " at vertex " + std::to_string(vertex);
  }
  return "color " + std::to_string(color_a) + " is used " + std::to_string(count_a) +
         " times but color " + std::to_string(color_b) + " is used " + std::to_string(count_b) +
         " times";
}

UniformityResult is_uniform(const EdgeColoredGraph& g) {
  const int n = g.n_vertices();
  const int nc = g.n_colors();
  // seen[vertex][color] = index of the first incident edge with that color
  std::vector<int> seen(static_cast<std::size_t>(n) * nc, -1);
  const auto& edges = g.edges();
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const auto& e = edges[idx];
    for (Vertex x : {e.u, e.v}) {
      auto& slot = seen[static_cast<std::size_t>(x) * nc + e.color];
      if (slot != -1) {
        UniformityWitness w;
        w.kind = UniformityWitness::Kind::IncidentSameColor;
        w.vertex = x;
        w.first = edges[slot];
        w.second = e;
        return {false, w};
      }
      slot = static_cast<int>(idx);
    }
  }

  std::vector<int> counts(nc, 0);
  for (const auto& e : edges) counts[e.color]++;
  for (int c = 1; c < nc; ++c) {
    if (counts[c] != counts[0]) {
      UniformityWitness w;
      w.kind = UniformityWitness::Kind::UnequalColorCounts;
      w.color_a = 0;
      w.color_b = c;
      w.count_a = counts[0];
      w.count_b = counts[c];
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::vector<UndirectedEdge>> color_classes(const EdgeColoredGraph& g) {
  std::vector<std::vector<UndirectedEdge>> classes(g.n_colors());
  for (const auto& e : g.edges()) {
    classes[e.color].push_back({e.u, e.v});
  }
  return classes;
}

}  // namespace graphlie
