#include <doctest.h>

#include "hinv/classify.hpp"

using namespace hinv;

namespace {

FgAbelianGroup lattice(std::size_t free, std::vector<long> factors = {}) {
  FgAbelianGroup a{free, {}};
  for (long d : factors) a.invariant_factors.emplace_back(d);
  return a;
}

// torus of rank r times vector group of dim u, coordinates torus first
GroupInput commutative(std::size_t r, std::size_t u) {
  std::vector<std::size_t> unip;
  for (std::size_t i = r; i < r + u; ++i) unip.push_back(i);
  return {algebras::abelian(r + u).with_unipotent_ideal(unip), lattice(r), true};
}

GroupInput gm_times_heisenberg() {
  auto g = LieAlgebra::from_brackets(4, {"t", "a", "b", "c"}, {{{1, 2}, {{3, 1}}}}).with_unipotent_ideal({1, 2, 3});
  return {g, lattice(1), true};
}

}  // namespace

TEST_CASE("SL2-type input is trivial") {
  ClassificationReport r = classify_connected({algebras::sl2().with_unipotent_ideal({}), lattice(0, {2}), true});
  CHECK(r.is_trivial());
  CHECK(r.isomorphism_type() == "(k^x)^0");
  CHECK(r.bset_summary.empty());
}

TEST_CASE("tori") {
  for (std::size_t n = 1; n <= 4; ++n) {
    ClassificationReport r = classify_connected(commutative(n, 0));
    CHECK(r.kx_rank == n * (n - 1) / 2);
    CHECK(r.finite_factors.empty());
    CHECK(r.additive_dim == 0);
  }
}

TEST_CASE("G_m x Heisenberg") {
  GroupInput in = gm_times_heisenberg();
  ClassificationReport r = classify_connected(in);
  CHECK(r.kx_rank == 0);
  CHECK(r.additive_dim == 3);
  CHECK(r.z_r_dim == 1);
  CHECK(r.z_u_dim == 1);
  CHECK(r.isomorphism_type() == "(k^x)^0 x k^3");
  REQUIRE(r.mixed_basis.size() == 1);
  CHECK(r.mixed_basis[0] == WedgeElement::single(4, 0, 3));
  REQUIRE(r.invariant_basis.size() == 2);
  CHECK(r.invariant_basis[0] == WedgeElement::single(4, 1, 3));
  CHECK(r.invariant_basis[1] == WedgeElement::single(4, 2, 3));
  CHECK(r.bset_summary == std::vector<BsetSummaryEntry>{{2, false}, {2, false}, {2, false}});

  auto elems = bset_elements(in);
  REQUIRE(elems.size() == 3);
  CHECK(elems[1].data.support == Subspace::coordinate(4, {1, 3}));
  CHECK(elems[2].data.support == Subspace::coordinate(4, {2, 3}));
}

TEST_CASE("G_m x G_a has a minimal element") {
  ClassificationReport r = classify_connected(commutative(1, 1));
  CHECK(r.kx_rank == 0);
  CHECK(r.additive_dim == 1);
  CHECK(r.bset_summary == std::vector<BsetSummaryEntry>{{2, true}});
}

TEST_CASE("torsion in the lattice") {
  GroupInput in = commutative(2, 1);
  in.z_r_lattice = lattice(2, {2});
  ClassificationReport r = classify_connected(in);
  // wedge^2(Z^2 + Z/2) = Z + (Z/2)^2
  CHECK(r.kx_rank == 1);
  CHECK(r.finite_factors == std::vector<Integer>{2, 2});
  CHECK(r.additive_dim == 2);
  CHECK(r.isomorphism_type() == "(k^x)^1 x Z/2 x Z/2 x k^2");
}

TEST_CASE("bset of the Heisenberg group and of abelian unipotent groups") {
  GroupInput h{algebras::heisenberg3().with_unipotent_ideal({0, 1, 2}), lattice(0), true};
  auto elems = bset_elements(h);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0].data.support == Subspace::coordinate(3, {0, 2}));
  CHECK(elems[1].data.support == Subspace::coordinate(3, {1, 2}));
  for (const auto& e : elems) {
    CHECK(e.data.support.dim() == 2);
    CHECK_FALSE(e.minimal);
    CHECK(invert(e.data.omega).rows() == 2);
  }

  auto ga3 = bset_elements(commutative(0, 3));
  CHECK(ga3.size() == 3);
  for (const auto& e : ga3) CHECK_FALSE(e.minimal);

  CHECK(bset_elements({LieAlgebra(0), lattice(0), true}).empty());
}

TEST_CASE("classify_connected agrees with classify_commutative on commutative input") {
  for (std::size_t r = 0; r <= 3; ++r)
    for (std::size_t u = 0; u <= 3; ++u) {
      CAPTURE(r);
      CAPTURE(u);
      CHECK(classify_connected(commutative(r, u)) == classify_commutative(lattice(r), r, u));
    }
  CHECK(classify_commutative(lattice(0), 0, 4).additive_dim == 6);
  CHECK(classify_commutative(lattice(3), 3, 0).kx_rank == 3);
}

TEST_CASE("report splits into lattice and Lie parts") {
  GroupInput a = gm_times_heisenberg(), b = gm_times_heisenberg();
  b.z_r_lattice = lattice(1, {6});
  ClassificationReport ra = classify_connected(a), rb = classify_connected(b);
  CHECK(ra.additive_dim == rb.additive_dim);
  CHECK(ra.invariant_basis == rb.invariant_basis);
  // wedge^2(Z + Z/6) = Z/6
  CHECK(rb.finite_factors == std::vector<Integer>{6});
}

TEST_CASE("input errors") {
  GroupInput bad_rank = gm_times_heisenberg();
  bad_rank.z_r_lattice = lattice(2);
  CHECK_THROWS_AS(classify_connected(bad_rank), ClassificationError);

  GroupInput disconnected = gm_times_heisenberg();
  disconnected.connected = false;
  CHECK_THROWS_AS(classify_connected(disconnected), ClassificationError);

  // sl2 marked as unipotent: an ideal, but not nilpotent
  CHECK_THROWS_AS(classify_connected({algebras::sl2().with_unipotent_ideal({0, 1, 2}), lattice(0), true}),
                  ClassificationError);

  // unipotent part that is not an ideal
  GroupInput not_ideal{algebras::heisenberg3().with_unipotent_ideal({0}), lattice(0), true};
  CHECK_THROWS_AS(classify_connected(not_ideal), ClassificationError);

  auto broken = LieAlgebra::from_brackets(3, {}, {{{0, 1}, {{2, 1}}}, {{1, 0}, {{2, 1}}}}, false);
  CHECK_THROWS_AS(bset_elements({broken, lattice(0), true}), ClassificationError);
}
