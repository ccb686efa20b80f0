#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/permutation.hpp"

namespace graphlie {

inline constexpr std::size_t kClosureBound = 1'000'000;
inline constexpr std::size_t kIsoBound = 10'000;

/// Euler's totient.
int euler_phi(int n);

/// Finite permutation group: canonically sorted element set plus a small
/// generating subset. Immutable after construction.
class PermutationGroup {
 public:
  /// Smallest group containing the generators. Throws InputError when the
  /// element count exceeds `bound`.
  static PermutationGroup closure(const std::vector<Permutation>& generators,
                                  int degree, std::size_t bound = kClosureBound);

  /// Wraps an element set that must already be a group; throws CheckError if
  /// it is not closed. Generators are recomputed greedily.
  static PermutationGroup from_elements(std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  /// Sorted lexicographically by image sequence; identity is first.
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  /// Index into elements(), or -1.
  int index_of(const Permutation& p) const;

  std::vector<int> orbit(int point) const;
  PermutationGroup stabilizer(int point) const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermutationGroup(int degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators);

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Rotations of {0..n-1}: the cyclic group of order n.
PermutationGroup build_cyclic(int n);

/// Degree-n group generated by x -> x+1 and x -> -x; order 2n. Requires n >= 3.
PermutationGroup build_dihedral(int n);

/// All maps x -> u*x + a on Z_n with gcd(u, n) = 1; order n * phi(n).
/// Requires n >= 2.
PermutationGroup build_holomorph(int n);

/// Verified isomorphism: image_of[i] is the index in B's element list of the
/// image of A's i-th element.
struct GroupIsomorphism {
  std::vector<int> image_of;
};

/// Backtracking over generator images with element-order pruning. The result
/// is verified to be a bijective homomorphism before being returned
/// (exhaustively for orders <= 200, sampled above).
std::optional<GroupIsomorphism> is_isomorphic(const PermutationGroup& a,
                                              const PermutationGroup& b,
                                              std::size_t bound = kIsoBound);

enum class GroupKind { Cyclic, Dihedral, Holomorph, Other };

std::string kind_name(GroupKind kind);

struct GroupIdentification {
  GroupKind kind = GroupKind::Other;
  int parameter = 0;
  bool verified = false;
  std::optional<GroupIsomorphism> isomorphism;  // to the reference group
};

/// Constructive recognition. Kinds are tried cyclic, dihedral (parameter
/// >= 3), then holomorph; `prefer`, when set, is tried first. Groups that
/// are isomorphic to several reference families (e.g. order 6: dihedral(3)
/// and holomorph(3)) report whichever matching kind comes first.
GroupIdentification identify(const PermutationGroup& g,
                             std::optional<GroupKind> prefer = std::nullopt);

}  // namespace graphlie
