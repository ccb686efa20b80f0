#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/group.hpp"
#include "graphlie/permutation.hpp"

namespace graphlie {

/// Default bound on full S_n scans; overridable per call (hard CLI max 11).
inline constexpr int kDefaultBruteCap = 9;
inline constexpr int kHardBruteCap = 11;

enum class Method { Brute, Fast, Both };

Method parse_method(std::string_view name);
std::string method_name(Method m);

/// f(x) = unit * x + translation on Z_n, gcd(unit, n) = 1.
struct AffineWitness {
  int translation;
  int unit;
  friend bool operator==(const AffineWitness&, const AffineWitness&) = default;
};

/// +color or -color; sign is +1 or -1.
struct SignedColor {
  ColorId color;
  int sign;
  friend bool operator==(const SignedColor&, const SignedColor&) = default;
};

/// Permutation of the signed color set, stored on the positive half and
/// extended by phi(-Z) = -phi(Z). The color components form a bijection.
class SignedColorPermutation {
 public:
  explicit SignedColorPermutation(std::vector<SignedColor> images);
  static SignedColorPermutation identity(int n_colors);

  int n_colors() const { return static_cast<int>(images_.size()); }
  SignedColor image(ColorId c) const { return images_[c]; }
  SignedColor image_signed(SignedColor sc) const;
  const std::vector<SignedColor>& images() const { return images_; }

  friend bool operator==(const SignedColorPermutation&,
                         const SignedColorPermutation&) = default;

 private:
  std::vector<SignedColor> images_;
};

/// True iff sigma preserves the (uncolored) edge set.
bool is_graph_automorphism(const Permutation& sigma, const EdgeColoredGraph& g);

/// The unique color permutation phi with phi(c(e)) = c(sigma(e)) on every
/// edge, if one exists. phi is forced edge-by-edge; a conflict or a failure
/// of injectivity yields nullopt. Throws InputError when sigma is not a
/// graph automorphism of g.
std::optional<Permutation> color_permutation_witness(const Permutation& sigma,
                                                     const EdgeColoredGraph& g);

/// True iff tau preserves equality of pairwise sums on Z_n: whenever
/// a+b = c+d (a != b, c != d), tau(a)+tau(b) = tau(c)+tau(d).
bool is_special(const Permutation& tau);

/// Decomposes f as x -> unit*x + translation when possible.
std::optional<AffineWitness> affine_witness(const Permutation& f);

/// The signed color permutation forced by phi(c(a, b)) = c(chi(a), chi(b))
/// over arcs and their reversals, if well-defined and bijective. Throws
/// InputError when chi is not a color permuting automorphism of the
/// underlying undirected graph.
std::optional<SignedColorPermutation> gla_witness(const Permutation& chi,
                                                  const DirectedEdgeColoredGraph& h);

/// Re-derives whether g is the complete pair-sum coloring on Z_n (odd n).
bool matches_gn_pattern(const EdgeColoredGraph& g);

/// Re-derives whether h carries the (m+i, m-i) orientation of that family.
bool matches_hn_pattern(const DirectedEdgeColoredGraph& h);

/// Color permuting automorphism group.
///  brute: filter all n! vertex permutations (n <= brute_cap).
///  fast:  emit the n*phi(n) affine maps; requires the pair-sum pattern.
///  both:  run both and require element-for-element agreement.
PermutationGroup enumerate_cpa(const EdgeColoredGraph& g, Method method,
                               int brute_cap = kDefaultBruteCap);

/// Graph Lie automorphism group.
///  brute: filter the CPA group of the underlying graph through gla_witness.
///  fast:  emit {x -> x+k} and {x -> k-x}; requires the directed pattern.
///  both:  run both and require agreement.
PermutationGroup enumerate_gla(const DirectedEdgeColoredGraph& h, Method method,
                               int brute_cap = kDefaultBruteCap);

/// R = {1..(n-1)/2}, L = {(n+1)/2..n-1}.
struct HalfSplit {
  std::vector<int> right;
  std::vector<int> left;
};

HalfSplit half_split(int n);

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct LemmaReport {
  int n;
  bool all_pass;
  std::vector<CheckItem> checks;
};

/// Exhaustive structural checks on the directed family of order n:
/// every non-identity unit multiplication moves R; the stabilizer of 0 in
/// the graph Lie automorphism group is {id, -id}; its elements square to
/// the identity; and the orbit-stabilizer product equation holds.
LemmaReport verify_stabilizer_lemmas(int n, int brute_cap = kDefaultBruteCap);

}  // namespace graphlie
