#include <doctest.h>

#include <algorithm>

#include "graphlie/group.hpp"
#include "graphlie/json_io.hpp"

using namespace graphlie;

namespace {

PermutationGroup klein_four() {
  return PermutationGroup::closure(
      {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}, 4);
}

}  // namespace

TEST_CASE("closure of generator sets") {
  CHECK(PermutationGroup::closure({translation_map(5, 1)}, 5).order() == 5);
  CHECK(PermutationGroup::closure({translation_map(5, 1), affine_map(5, 4, 0)}, 5).order() == 10);
  CHECK(PermutationGroup::closure({}, 4).order() == 1);
  CHECK_THROWS_AS(PermutationGroup::closure({translation_map(5, 1)}, 5, 3), InputError);
}

TEST_CASE("from_elements validates closure and finds generators") {
  std::vector<Permutation> elements;
  for (int k = 0; k < 7; ++k) elements.push_back(translation_map(7, k));
  const auto group = PermutationGroup::from_elements(elements);
  CHECK(group.order() == 7);
  CHECK(PermutationGroup::closure(group.generators(), 7).order() == 7);

  // Missing the identity.
  CHECK_THROWS_AS(PermutationGroup::from_elements({translation_map(3, 1)}), CheckError);
  // Not closed: a single non-trivial rotation plus the identity.
  CHECK_THROWS_AS(PermutationGroup::from_elements(
                      {Permutation::identity(5), translation_map(5, 1)}),
                  CheckError);
}

TEST_CASE("orbits and stabilizers") {
  const auto c7 = build_cyclic(7);
  CHECK(c7.orbit(0) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const auto trivial = PermutationGroup::closure({}, 5);
  CHECK(trivial.orbit(3) == std::vector<int>{3});
  CHECK(trivial.stabilizer(0).order() == 1);

  const auto d5 = build_dihedral(5);
  const auto stab = d5.stabilizer(0);
  CHECK(stab.order() == 2);
  CHECK(stab.contains(affine_map(5, 4, 0)));

  // Orbit-stabilizer product for every point of several groups.
  for (const auto& group : {build_dihedral(6), build_holomorph(8), klein_four()}) {
    for (int p = 0; p < group.degree(); ++p) {
      CHECK(group.orbit(p).size() * group.stabilizer(p).order() == group.order());
    }
  }
}

TEST_CASE("reference group orders") {
  for (int n = 3; n <= 13; ++n) {
    CHECK(build_dihedral(n).order() == 2 * static_cast<std::size_t>(n));
  }
  for (int n = 2; n <= 13; ++n) {
    CHECK(build_holomorph(n).order() == static_cast<std::size_t>(n) * euler_phi(n));
  }
  CHECK(build_holomorph(5).order() == 20);
  CHECK(build_holomorph(9).order() == 54);
  CHECK(build_dihedral(4).order() == 8);

  // At order 3 the holomorph is the full symmetric group.
  std::vector<int> images{0, 1, 2};
  std::vector<Permutation> s3;
  do {
    s3.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(build_holomorph(3) == PermutationGroup::from_elements(s3));
}

TEST_CASE("group axioms hold for constructed groups") {
  for (const auto& group : {build_cyclic(6), build_dihedral(7), build_holomorph(9)}) {
    CHECK(group.contains(Permutation::identity(group.degree())));
    for (const auto& a : group.elements()) {
      CHECK(group.contains(a.inverse()));
      for (const auto& b : group.elements()) {
        CHECK(group.contains(a.compose(b)));
      }
    }
  }
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(build_holomorph(5), build_holomorph(5)).has_value());
  CHECK(is_isomorphic(build_dihedral(7), build_dihedral(7)).has_value());

  // Same order, different element-order profiles.
  CHECK_FALSE(is_isomorphic(build_cyclic(4), klein_four()).has_value());
  // Same order 20, holomorph(5) has an element of order 4, dihedral(10) does not.
  CHECK_FALSE(is_isomorphic(build_holomorph(5), build_dihedral(10)).has_value());

  // Degree does not matter, only the abstract structure.
  const auto rotations_as_degree6 =
      PermutationGroup::closure({Permutation({1, 2, 0, 4, 5, 3})}, 6);
  CHECK(is_isomorphic(rotations_as_degree6, build_cyclic(3)).has_value());
}

TEST_CASE("isomorphisms are verified homomorphisms both ways") {
  const std::vector<PermutationGroup> fixtures{build_cyclic(6), build_dihedral(3),
                                               build_holomorph(4), klein_four()};
  for (const auto& a : fixtures) {
    for (const auto& b : fixtures) {
      const auto ab = is_isomorphic(a, b);
      const auto ba = is_isomorphic(b, a);
      CHECK(ab.has_value() == ba.has_value());
      if (!ab) continue;
      const auto& f = ab->image_of;
      for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
          const int lhs = f[a.index_of(a.elements()[i].compose(a.elements()[j]))];
          const int rhs = b.index_of(b.elements()[f[i]].compose(b.elements()[f[j]]));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("identification of the reference families") {
  const auto cyclic = identify(build_cyclic(6));
  CHECK(cyclic.kind == GroupKind::Cyclic);
  CHECK(cyclic.parameter == 6);
  CHECK(cyclic.verified);
  CHECK(cyclic.isomorphism.has_value());

  const auto dihedral = identify(build_dihedral(4));
  CHECK(dihedral.kind == GroupKind::Dihedral);
  CHECK(dihedral.parameter == 4);

  const auto holomorph = identify(build_holomorph(7));
  CHECK(holomorph.kind == GroupKind::Holomorph);
  CHECK(holomorph.parameter == 7);

  const auto other = identify(klein_four());
  CHECK(other.kind == GroupKind::Other);
  CHECK_FALSE(other.verified);

  CHECK(identify(PermutationGroup::closure({}, 3)).kind == GroupKind::Cyclic);
}

TEST_CASE("identification preference breaks ties between matching kinds") {
  // Order 6: the holomorph of Z_3 is also dihedral(3); the default try order
  // reports dihedral, a holomorph preference flips it.
  const auto group = build_holomorph(3);
  CHECK(identify(group).kind == GroupKind::Dihedral);
  const auto preferred = identify(group, GroupKind::Holomorph);
  CHECK(preferred.kind == GroupKind::Holomorph);
  CHECK(preferred.parameter == 3);
  CHECK(preferred.verified);

  // A preference that does not match falls back to the regular order.
  CHECK(identify(build_cyclic(5), GroupKind::Dihedral).kind == GroupKind::Cyclic);
}

TEST_CASE("group json round trip") {
  const auto group = build_dihedral(6);
  const auto parsed = group_from_json(group_to_json(group));
  CHECK(parsed == group);

  auto tampered = group_to_json(group);
  tampered["order"] = 13;
  CHECK_THROWS_AS(group_from_json(tampered), InputError);
}
