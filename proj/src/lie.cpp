#include "graphlie/lie.hpp"

#include <algorithm>
#include <set>

namespace graphlie {

AlgebraVector AlgebraVector::zero(int dim) { return AlgebraVector(std::vector<Rat>(dim)); }

AlgebraVector AlgebraVector::unit(int dim, int index) {
  AlgebraVector v = zero(dim);
  v[index] = Rat(1);
  return v;
}

bool AlgebraVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == Rat(0); });
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& o) {
  if (dim() != o.dim()) throw InputError("vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& o) {
  if (dim() != o.dim()) throw InputError("vector dimension mismatch");
  for (int i = 0; i < dim(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraVector& AlgebraVector::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LieAlgebra2Step::LieAlgebra2Step(int dim_v, int dim_w, Table table)
    : dim_v_(dim_v), dim_w_(dim_w), table_(std::move(table)) {
  if (dim_v <= 0 || dim_w <= 0) throw InputError("algebra dimensions must be positive");
  for (const auto& [pair, value] : table_) {
    const auto [i, j] = pair;
    if (i < 0 || j >= dim_v_ || i >= j) {
      throw InputError("bracket table keys must be vertex pairs (i, j) with 0 <= i < j < dim_v");
    }
    if (value.dim() != dimension()) throw InputError("bracket value has wrong dimension");
    for (int k = 0; k < dim_v_; ++k) {
      if (value[k] != Rat(0)) {
        throw InputError("bracket values must lie in the span of W");
      }
    }
  }
}

LieAlgebra2Step LieAlgebra2Step::from_graph(const DirectedEdgeColoredGraph& h) {
  const int dim_v = h.n_vertices();
  const int dim_w = h.n_colors();
  Table table;
  for (const auto& arc : h.arcs()) {
    AlgebraVector value = AlgebraVector::zero(dim_v + dim_w);
    // [from, to] = +Z; stored on the ordered key (min, max) with the sign
    // flipped when the arc runs against it.
    const Rat sign = arc.from < arc.to ? Rat(1) : Rat(-1);
    value[dim_v + arc.color] = sign;
    table.emplace(std::make_pair(std::min(arc.from, arc.to), std::max(arc.from, arc.to)),
                  std::move(value));
  }
  return LieAlgebra2Step(dim_v, dim_w, std::move(table));
}

AlgebraVector LieAlgebra2Step::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dimension() || j >= dimension()) {
    throw InputError("basis index out of range");
  }
  if (i >= dim_v_ || j >= dim_v_ || i == j) return AlgebraVector::zero(dimension());
  const bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return AlgebraVector::zero(dimension());
  AlgebraVector value = it->second;
  if (flip) value *= Rat(-1);
  return value;
}

AlgebraVector LieAlgebra2Step::bracket(const AlgebraVector& x, const AlgebraVector& y) const {
  if (x.dim() != dimension() || y.dim() != dimension()) {
    throw InputError("vector dimension does not match the algebra");
  }
  AlgebraVector result = AlgebraVector::zero(dimension());
  for (const auto& [pair, value] : table_) {
    const auto [i, j] = pair;
    const Rat coeff = x[i] * y[j] - x[j] * y[i];
    if (coeff == Rat(0)) continue;
    AlgebraVector term = value;
    term *= coeff;
    result += term;
  }
  return result;
}

bool check_two_step(const LieAlgebra2Step& alg) {
  const int dim = alg.dimension();
  std::vector<AlgebraVector> basis;
  basis.reserve(dim);
  for (int i = 0; i < dim; ++i) basis.push_back(AlgebraVector::unit(dim, i));
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      const AlgebraVector inner = alg.bracket_basis(j, k);
      if (inner.is_zero()) continue;
      for (int i = 0; i < dim; ++i) {
        if (!alg.bracket(basis[i], inner).is_zero()) return false;
      }
    }
  }
  return true;
}

bool check_jacobi(const LieAlgebra2Step& alg) {
  const int dim = alg.dimension();
  std::vector<AlgebraVector> basis;
  basis.reserve(dim);
  for (int i = 0; i < dim; ++i) basis.push_back(AlgebraVector::unit(dim, i));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        AlgebraVector sum = alg.bracket(basis[i], alg.bracket_basis(j, k));
        sum += alg.bracket(basis[j], alg.bracket_basis(k, i));
        sum += alg.bracket(basis[k], alg.bracket_basis(i, j));
        if (!sum.is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<int> derived_subalgebra(const LieAlgebra2Step& alg) {
  std::set<int> hit;
  for (const auto& [pair, value] : alg.bracket_table()) {
    for (int w = 0; w < alg.dim_w(); ++w) {
      if (value[alg.dim_v() + w] != Rat(0)) hit.insert(w);
    }
  }
  return std::vector<int>(hit.begin(), hit.end());
}

LinearMap::LinearMap(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim, Rat(0)) {
  if (dim <= 0) throw InputError("linear map dimension must be positive");
}

LinearMap LinearMap::identity(int dim) {
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Rat(1);
  return m;
}

AlgebraVector LinearMap::apply(const AlgebraVector& v) const {
  if (v.dim() != dim_) throw InputError("vector dimension does not match the map");
  AlgebraVector out = AlgebraVector::zero(dim_);
  for (int r = 0; r < dim_; ++r) {
    Rat acc(0);
    for (int c = 0; c < dim_; ++c) {
      if (v[c] != Rat(0)) acc += at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

AlgebraVector LinearMap::column(int j) const {
  AlgebraVector out = AlgebraVector::zero(dim_);
  for (int r = 0; r < dim_; ++r) out[r] = at(r, j);
  return out;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (dim_ != o.dim_) throw InputError("linear map dimension mismatch");
  LinearMap out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      if (at(r, k) == Rat(0)) continue;
      for (int c = 0; c < dim_; ++c) {
        out.at(r, c) += at(r, k) * o.at(k, c);
      }
    }
  }
  return out;
}

int LinearMap::rank() const {
  std::vector<Rat> work = m_;
  auto cell = [&](int r, int c) -> Rat& { return work[static_cast<std::size_t>(r) * dim_ + c]; };
  int rank = 0;
  for (int col = 0; col < dim_ && rank < dim_; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim_; ++r) {
      if (cell(r, col) != Rat(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    for (int c = 0; c < dim_; ++c) std::swap(cell(pivot, c), cell(rank, c));
    const Rat lead = cell(rank, col);
    for (int r = rank + 1; r < dim_; ++r) {
      if (cell(r, col) == Rat(0)) continue;
      const Rat factor = cell(r, col) / lead;
      for (int c = col; c < dim_; ++c) {
        cell(r, c) -= factor * cell(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

LinearMap extend_gla(const Permutation& chi, const SignedColorPermutation& phi,
                     const LieAlgebra2Step& alg) {
  if (chi.degree() != alg.dim_v() || phi.n_colors() != alg.dim_w()) {
    throw InputError("extension dimensions do not match the algebra");
  }
  LinearMap m(alg.dimension());
  for (int v = 0; v < alg.dim_v(); ++v) {
    m.at(chi(v), v) = Rat(1);
  }
  for (int c = 0; c < alg.dim_w(); ++c) {
    const SignedColor img = phi.image(c);
    m.at(alg.dim_v() + img.color, alg.dim_v() + c) = Rat(img.sign);
  }
  if (!is_lie_automorphism(m, alg)) {
    throw InputError("(chi, phi) does not extend to a Lie automorphism of this algebra");
  }
  return m;
}

bool is_lie_automorphism(const LinearMap& m, const LieAlgebra2Step& alg) {
  const int dim = alg.dimension();
  if (m.dim() != dim) throw InputError("linear map dimension does not match the algebra");
  if (!m.invertible()) return false;
  std::vector<AlgebraVector> columns;
  columns.reserve(dim);
  for (int j = 0; j < dim; ++j) columns.push_back(m.column(j));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if (!(m.apply(alg.bracket_basis(i, j)) == alg.bracket(columns[i], columns[j]))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<LinearMap> gla_image_group(const DirectedEdgeColoredGraph& h, int brute_cap) {
  const LieAlgebra2Step alg = LieAlgebra2Step::from_graph(h);
  const PermutationGroup gla = enumerate_gla(h, Method::Brute, brute_cap);
  std::vector<LinearMap> mats;
  mats.reserve(gla.order());
  for (const auto& chi : gla.elements()) {
    const auto phi = gla_witness(chi, h);
    mats.push_back(extend_gla(chi, *phi, alg));
  }
  // The extension must be injective and land in a matrix group.
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      if (mats[i] == mats[j]) throw CheckError("extension is not injective");
    }
  }
  const LinearMap id = LinearMap::identity(alg.dimension());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < mats.size(); ++j) {
      const LinearMap product = mats[i] * mats[j];
      if (std::find(mats.begin(), mats.end(), product) == mats.end()) {
        throw CheckError("extension image is not closed under products");
      }
      if (product == id) has_inverse = true;
    }
    if (!has_inverse) throw CheckError("extension image is missing an inverse");
  }
  return mats;
}

}  // namespace graphlie
