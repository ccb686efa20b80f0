#pragma once

#include <compare>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

/// Bijection on {0..degree-1}, stored as its image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// (*this) after `inner`: x maps to this(inner(x)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  /// Multiplicative order (lcm of cycle lengths).
  long long order() const;
  bool is_identity() const;

  /// Lexicographic on image sequences.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// x maps to (unit * x + shift) mod n. Throws unless the result is a bijection.
Permutation affine_map(int n, int unit, int shift);

/// x maps to (x + shift) mod n.
Permutation translation_map(int n, int shift);

/// Cycle notation like "(0 2)(1 3)", "id" for the identity.
std::string cycle_string(const Permutation& p);

}  // namespace graphlie
