#pragma once

#include <boost/rational.hpp>
#include <map>
#include <utility>
#include <vector>

#include "graphlie/automorphism.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/permutation.hpp"

namespace graphlie {

/// Exact scalar. Everything in this module is rational arithmetic; no
/// floating point anywhere.
using Rat = boost::rational<long long>;

/// Basis position in V + W: vertices span V, colors span W.
struct BasisIndex {
  enum class Part { V, W };
  Part part;
  int index;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Dense coefficient vector over the V + W basis.
class AlgebraVector {
 public:
  AlgebraVector() = default;
  explicit AlgebraVector(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}
  static AlgebraVector zero(int dim);
  static AlgebraVector unit(int dim, int index);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const;
  const Rat& operator[](int i) const { return coeffs_[i]; }
  Rat& operator[](int i) { return coeffs_[i]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  AlgebraVector& operator+=(const AlgebraVector& o);
  AlgebraVector& operator-=(const AlgebraVector& o);
  AlgebraVector& operator*=(const Rat& s);
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const Rat& s, AlgebraVector a) { return a *= s; }
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// 2-step nilpotent algebra on V + W given by a structure-constant table:
/// brackets of vertex basis pairs (i, j), i < j, with values in the span of
/// W. The opposite orientation is the negation of the stored value; W is
/// central. The constructor rejects tables that break this shape.
class LieAlgebra2Step {
 public:
  using Table = std::map<std::pair<int, int>, AlgebraVector>;

  LieAlgebra2Step(int dim_v, int dim_w, Table table);

  /// Vertices become V basis vectors, colors W basis vectors, and each arc
  /// (a, b) with color Z contributes [a, b] = Z.
  static LieAlgebra2Step from_graph(const DirectedEdgeColoredGraph& h);

  int dim_v() const { return dim_v_; }
  int dim_w() const { return dim_w_; }
  int dimension() const { return dim_v_ + dim_w_; }
  const Table& bracket_table() const { return table_; }

  /// Bracket of two basis vectors, any order, full-space indices.
  AlgebraVector bracket_basis(int i, int j) const;
  /// Bilinear, antisymmetric extension of the table.
  AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) const;

 private:
  int dim_v_;
  int dim_w_;
  Table table_;
};

/// [b_i, [b_j, b_k]] = 0 for every basis triple, checked exhaustively.
bool check_two_step(const LieAlgebra2Step& alg);

/// Cyclic Jacobi sum vanishes for every basis triple.
bool check_jacobi(const LieAlgebra2Step& alg);

/// W indices (color ids) hit by some bracket value. For surjectively colored
/// graphs this is all of W.
std::vector<int> derived_subalgebra(const LieAlgebra2Step& alg);

/// Square matrix of exact rationals; column j is the image of basis j.
class LinearMap {
 public:
  explicit LinearMap(int dim);
  static LinearMap identity(int dim);

  int dim() const { return dim_; }
  const Rat& at(int row, int col) const { return m_[row * dim_ + col]; }
  Rat& at(int row, int col) { return m_[row * dim_ + col]; }

  AlgebraVector apply(const AlgebraVector& v) const;
  AlgebraVector column(int j) const;
  LinearMap operator*(const LinearMap& o) const;

  /// Exact rank by rational Gaussian elimination.
  int rank() const;
  bool invertible() const { return rank() == dim_; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  int dim_;
  std::vector<Rat> m_;
};

/// The signed permutation matrix acting as chi on V and phi on W. Throws
/// InputError unless the result is a Lie automorphism of alg, i.e. unless
/// (chi, phi) is a valid graph-Lie pair for alg's table.
LinearMap extend_gla(const Permutation& chi, const SignedColorPermutation& phi,
                     const LieAlgebra2Step& alg);

/// True iff m is invertible and m[b_i, b_j] = [m b_i, m b_j] for all basis
/// pairs (bilinearity makes the basis check equivalent to the full one).
bool is_lie_automorphism(const LinearMap& m, const LieAlgebra2Step& alg);

/// Extends every graph Lie automorphism of h to a matrix; asserts the set
/// is a group of distinct matrices and returns it in the element order of
/// the underlying permutation group.
std::vector<LinearMap> gla_image_group(const DirectedEdgeColoredGraph& h,
                                       int brute_cap = kDefaultBruteCap);

}  // namespace graphlie
