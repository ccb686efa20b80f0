#include <doctest.h>

#include <random>

#include "graphlie/json_io.hpp"
#include "graphlie/lie.hpp"
#include "test_helpers.hpp"

using namespace graphlie;
using test_helpers::load_directed_fixture;

namespace {

LieAlgebra2Step square_algebra() {
  return LieAlgebra2Step::from_graph(load_directed_fixture("example41.json"));
}

AlgebraVector random_vector(int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  AlgebraVector v = AlgebraVector::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = Rat(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("from_graph on the directed square") {
  const auto alg = square_algebra();
  CHECK(alg.dim_v() == 4);
  CHECK(alg.dim_w() == 2);
  CHECK(alg.dimension() == 6);  // |S| + |C|

  const AlgebraVector w0 = AlgebraVector::unit(6, 4);
  const AlgebraVector w1 = AlgebraVector::unit(6, 5);
  CHECK(alg.bracket_basis(0, 1) == w0);
  CHECK(alg.bracket_basis(2, 3) == w0);
  CHECK(alg.bracket_basis(1, 2) == w1);
  CHECK(alg.bracket_basis(0, 3) == w1);
  CHECK(alg.bracket_basis(0, 2).is_zero());
  CHECK(alg.bracket_basis(1, 3).is_zero());
  CHECK(alg.bracket_basis(1, 0) == Rat(-1) * w0);
  // W is central.
  CHECK(alg.bracket_basis(4, 5).is_zero());
  CHECK(alg.bracket_basis(0, 4).is_zero());

  CHECK(LieAlgebra2Step::from_graph(build_hn(5)).dimension() == 10);
}

TEST_CASE("bracket is the bilinear antisymmetric extension") {
  const auto alg = square_algebra();
  AlgebraVector x = AlgebraVector::zero(6);
  x[0] = Rat(2);
  x[1] = Rat(1);
  const AlgebraVector y = AlgebraVector::unit(6, 2);
  CHECK(alg.bracket(x, y) == AlgebraVector::unit(6, 5));  // 2[a,c] + [b,c] = Z_2

  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = random_vector(6, rng);
    const auto v = random_vector(6, rng);
    const auto w = random_vector(6, rng);
    CHECK(alg.bracket(u, u).is_zero());
    CHECK(alg.bracket(u, v) == Rat(-1) * alg.bracket(v, u));
    const Rat a(3, 2), b(-7, 3);
    CHECK(alg.bracket(a * u + b * v, w) ==
          a * alg.bracket(u, w) + b * alg.bracket(v, w));
    // Anything supported on W brackets to zero.
    AlgebraVector center = AlgebraVector::zero(6);
    center[4] = v[4];
    center[5] = v[5];
    CHECK(alg.bracket(u, center).is_zero());
  }
}

TEST_CASE("two-step and jacobi checks") {
  CHECK(check_two_step(square_algebra()));
  CHECK(check_jacobi(square_algebra()));
  for (int n : {3, 5, 7}) {
    const auto alg = LieAlgebra2Step::from_graph(build_hn(n));
    CHECK(check_two_step(alg));
    CHECK(check_jacobi(alg));
  }
  // Abelian algebra: empty bracket table.
  const LieAlgebra2Step abelian(3, 2, {});
  CHECK(check_two_step(abelian));
  CHECK(check_jacobi(abelian));
  CHECK(derived_subalgebra(abelian).empty());
}

TEST_CASE("malformed bracket tables are rejected") {
  const AlgebraVector w0 = AlgebraVector::unit(5, 3);
  AlgebraVector bad = AlgebraVector::zero(5);
  bad[0] = Rat(1);
  CHECK_THROWS_AS(LieAlgebra2Step(3, 2, {{{1, 1}, w0}}), InputError);   // i == j
  CHECK_THROWS_AS(LieAlgebra2Step(3, 2, {{{1, 0}, w0}}), InputError);   // i > j
  CHECK_THROWS_AS(LieAlgebra2Step(3, 2, {{{1, 4}, w0}}), InputError);   // j outside V
  CHECK_THROWS_AS(LieAlgebra2Step(3, 2, {{{0, 1}, bad}}), InputError);  // V-supported value
  CHECK_THROWS_AS(LieAlgebra2Step(3, 2, {{{0, 1}, AlgebraVector::zero(4)}}),
                  InputError);  // wrong dimension
}

TEST_CASE("derived subalgebra spans the used colors") {
  CHECK(derived_subalgebra(square_algebra()) == std::vector<int>{0, 1});
  CHECK(derived_subalgebra(LieAlgebra2Step::from_graph(build_hn(5))) ==
        std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("extension of graph Lie pairs") {
  const auto square = load_directed_fixture("example41.json");
  const auto alg = LieAlgebra2Step::from_graph(square);

  const Permutation chi({1, 0, 3, 2});
  const auto phi = gla_witness(chi, square);
  REQUIRE(phi.has_value());
  const LinearMap m = extend_gla(chi, *phi, alg);
  CHECK(is_lie_automorphism(m, alg));
  CHECK(m.at(1, 0) == Rat(1));
  CHECK(m.at(4, 4) == Rat(-1));  // phi(Z_1) = -Z_1
  CHECK(m.at(5, 5) == Rat(1));   // phi(Z_2) = Z_2

  CHECK(extend_gla(Permutation::identity(4), SignedColorPermutation::identity(2), alg) ==
        LinearMap::identity(6));

  // A signed color permutation that does not match the vertex action.
  const SignedColorPermutation swap_colors({{1, 1}, {0, 1}});
  CHECK_THROWS_AS(extend_gla(Permutation::identity(4), swap_colors, alg), InputError);
}

TEST_CASE("rotation of the directed family extends with doubled color shift") {
  const auto h5 = build_hn(5);
  const auto alg = LieAlgebra2Step::from_graph(h5);
  const Permutation rotation = translation_map(5, 1);
  const auto phi = gla_witness(rotation, h5);
  REQUIRE(phi.has_value());
  for (int l = 0; l < 5; ++l) {
    CHECK(phi->image(l) == SignedColor{(l + 2) % 5, +1});
  }
  CHECK(is_lie_automorphism(extend_gla(rotation, *phi, alg), alg));
}

TEST_CASE("is_lie_automorphism rejects non-automorphisms") {
  const auto alg = square_algebra();
  CHECK(is_lie_automorphism(LinearMap::identity(6), alg));

  // Swapping the first two vertex vectors only flips the sign of [a, b].
  LinearMap swap = LinearMap::identity(6);
  swap.at(0, 0) = Rat(0);
  swap.at(1, 1) = Rat(0);
  swap.at(0, 1) = Rat(1);
  swap.at(1, 0) = Rat(1);
  CHECK_FALSE(is_lie_automorphism(swap, alg));

  CHECK_FALSE(is_lie_automorphism(LinearMap(6), alg));  // zero map, not invertible
  CHECK_THROWS_AS(is_lie_automorphism(LinearMap(5), alg), InputError);
}

TEST_CASE("exact rank computation") {
  LinearMap m(3);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(1, 4);
  m.at(1, 1) = Rat(1, 6);  // row 1 = row 0 / 2
  m.at(2, 2) = Rat(7);
  CHECK(m.rank() == 2);
  CHECK(LinearMap::identity(6).rank() == 6);
  CHECK(LinearMap(4).rank() == 0);
}

TEST_CASE("extension is an injective homomorphism onto a matrix group") {
  struct Case {
    DirectedEdgeColoredGraph graph;
    std::size_t expected;
  };
  const std::vector<Case> cases{{build_hn(3), 6},
                                {build_hn(5), 10},
                                {load_directed_fixture("example41.json"), 4}};
  for (const auto& [graph, expected] : cases) {
    const auto mats = gla_image_group(graph);
    CHECK(mats.size() == expected);

    const auto gla = enumerate_gla(graph, Method::Brute);
    const auto alg = LieAlgebra2Step::from_graph(graph);
    REQUIRE(gla.order() == mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
      CHECK(is_lie_automorphism(mats[i], alg));
      for (std::size_t j = 0; j < mats.size(); ++j) {
        const int k = gla.index_of(gla.elements()[i].compose(gla.elements()[j]));
        REQUIRE(k >= 0);
        CHECK(mats[i] * mats[j] == mats[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("the extension of a graph Lie pair is unique") {
  // For a fixed vertex action, exactly one signed color permutation yields a
  // Lie automorphism; it is the forced witness.
  const auto square = load_directed_fixture("example41.json");
  const auto alg = LieAlgebra2Step::from_graph(square);
  const auto gla = enumerate_gla(square, Method::Brute);
  for (const auto& chi : gla.elements()) {
    const auto forced = gla_witness(chi, square);
    REQUIRE(forced.has_value());
    int matches = 0;
    for (int swap = 0; swap < 2; ++swap) {
      for (int s0 : {1, -1}) {
        for (int s1 : {1, -1}) {
          const SignedColorPermutation candidate(
              {{swap ? 1 : 0, s0}, {swap ? 0 : 1, s1}});
          LinearMap m(6);
          for (int v = 0; v < 4; ++v) m.at(chi(v), v) = Rat(1);
          for (int c = 0; c < 2; ++c) {
            const SignedColor img = candidate.image(c);
            m.at(4 + img.color, 4 + c) = Rat(img.sign);
          }
          if (is_lie_automorphism(m, alg)) {
            ++matches;
            CHECK(candidate == *forced);
          }
        }
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("algebra json round trip") {
  const auto alg = square_algebra();
  const auto parsed = algebra_from_json(algebra_to_json(alg));
  CHECK(parsed.dim_v() == alg.dim_v());
  CHECK(parsed.dim_w() == alg.dim_w());
  CHECK(parsed.bracket_table() == alg.bracket_table());
}
