#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

using Vertex = int;
using ColorId = int;

/// Undirected edge, stored with the smaller endpoint first.
struct UndirectedEdge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

inline UndirectedEdge make_edge(Vertex a, Vertex b) {
  return a < b ? UndirectedEdge{a, b} : UndirectedEdge{b, a};
}

/// Undirected edge together with its color.
struct ColoredEdge {
  Vertex u;
  Vertex v;
  ColorId color;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Directed edge together with its color.
struct ColoredArc {
  Vertex from;
  Vertex to;
  ColorId color;
  friend auto operator<=>(const ColoredArc&, const ColoredArc&) = default;
};

/// Finite simple graph with a total, surjective edge coloring.
/// Immutable after construction; the constructor validates every invariant
/// and reports the first violation with its edge index.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph(int n_vertices, int n_colors, std::vector<ColoredEdge> edges);

  int n_vertices() const { return n_vertices_; }
  int n_colors() const { return n_colors_; }
  /// Edges in canonical order: endpoints normalized u < v, sorted by (u, v).
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::optional<ColorId> color_of(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return color_of(a, b).has_value(); }
  bool is_complete() const;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.n_colors_ == b.n_colors_ &&
           a.edges_ == b.edges_;
  }

 private:
  int n_vertices_ = 0;
  int n_colors_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<int> color_matrix_;  // n*n, -1 where no edge
};

/// Directed variant: each unordered vertex pair carries at most one arc.
class DirectedEdgeColoredGraph {
 public:
  DirectedEdgeColoredGraph(int n_vertices, int n_colors, std::vector<ColoredArc> arcs);

  int n_vertices() const { return n_vertices_; }
  int n_colors() const { return n_colors_; }
  /// Arcs sorted by (from, to); orientation is preserved as given.
  const std::vector<ColoredArc>& arcs() const { return arcs_; }

  std::optional<ColorId> color_of(Vertex from, Vertex to) const;
  /// The stored arc covering the unordered pair {a, b}, if any.
  std::optional<ColoredArc> arc_covering(Vertex a, Vertex b) const;

  friend bool operator==(const DirectedEdgeColoredGraph& a, const DirectedEdgeColoredGraph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.n_colors_ == b.n_colors_ &&
           a.arcs_ == b.arcs_;
  }

 private:
  int n_vertices_ = 0;
  int n_colors_ = 0;
  std::vector<ColoredArc> arcs_;
  std::vector<int> arc_matrix_;  // n*n, color of arc (i, j) or -1
};

/// Complete graph on {0..n-1} with edge {i, j} colored (i + j) mod n.
/// Requires odd n >= 3.
EdgeColoredGraph build_gn(int n);

/// Directed version: arc set {(m+i, m-i) : 0 <= m < n, 1 <= i <= (n-1)/2}
/// mod n, arc (i, j) colored (i + j) mod n. Requires odd n >= 3.
DirectedEdgeColoredGraph build_hn(int n);

/// Forget orientation, keep colors.
EdgeColoredGraph underlying_undirected(const DirectedEdgeColoredGraph& h);

struct UniformityWitness {
  enum class Kind { IncidentSameColor, UnequalColorCounts };
  Kind kind;
  // IncidentSameColor: two edges of equal color meeting at `vertex`.
  Vertex vertex = -1;
  ColoredEdge first{};
  ColoredEdge second{};
  // UnequalColorCounts: two colors used a different number of times.
  ColorId color_a = -1;
  ColorId color_b = -1;
  int count_a = 0;
  int count_b = 0;

  std::string describe() const;
};

struct UniformityResult {
  bool uniform;
  std::optional<UniformityWitness> witness;  // present iff not uniform
};

/// Checks both uniformity conditions: no vertex sees the same color twice,
/// and every color is used equally often.
UniformityResult is_uniform(const EdgeColoredGraph& g);

/// Partition of the edge set by color, indexed by ColorId.
std::vector<std::vector<UndirectedEdge>> color_classes(const EdgeColoredGraph& g);

}  // namespace graphlie
