#include <doctest.h>

#include <random>

#include "disc24/disc_forms.hpp"
#include "disc24/lattices.hpp"
#include "oracles.hpp"

using namespace disc24;

TEST_CASE("standard lattices") {
  const Lattice e8 = e8_negative();
  CHECK(e8.rank() == 8);
  CHECK(determinant(e8.gram()) == 1);
  CHECK(e8.is_even());
  CHECK(signature_of_symmetric(e8.gram()) == Signature{0, 8, 0});
  CHECK(determinant(a2_like().gram()) == 3);
  CHECK(standard_lattice("rank1(-6)") == rank_one(-6));
  CHECK(standard_lattice("U") == hyperbolic_plane());
  CHECK_THROWS_AS(standard_lattice("D4"), Error);
  CHECK_THROWS_AS(Lattice(IntMatrix{{1, 2}, {3, 4}}), Error);
}

TEST_CASE("invariants of the K3-type sum") {
  Lattice k3 = direct_sum(direct_sum(hyperbolic_plane(), hyperbolic_plane()), hyperbolic_plane());
  k3 = direct_sum(direct_sum(k3, e8_negative()), e8_negative());
  const LatticeInvariants inv = lattice_invariants(k3);
  CHECK(inv.rank == 22);
  CHECK(inv.disc == 1);
  CHECK(inv.det_sign == -1);
  CHECK(inv.signature == Signature{3, 19, 0});
  CHECK(inv.is_even);
}

TEST_CASE("100 random unimodular congruences preserve invariants") {
  std::mt19937_64 rng(2024);
  const Lattice base = direct_sum(direct_sum(a2_like(), rank_one(8)), hyperbolic_plane());
  const LatticeInvariants inv = lattice_invariants(base);
  const FiniteQuadraticForm form = discriminant_form(base);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix u = oracle::random_unimodular(base.rank(), rng);
    const Lattice moved(u * base.gram() * u.transpose());
    const LatticeInvariants m = lattice_invariants(moved);
    CHECK(m.disc == inv.disc);
    CHECK(m.det_sign == inv.det_sign);
    CHECK(m.signature == inv.signature);
    CHECK(m.is_even == inv.is_even);
    CHECK(verify_isometry(base, moved, u));
    if (t % 10 == 0) CHECK(fqf_isomorphic(discriminant_form(moved), form));
  }
}

TEST_CASE("orthogonal complement and saturation") {
  const Lattice u2 = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  const SublatticeEmbedding v(u2, IntMatrix{{1, 3, 0, 0}});
  const SublatticeEmbedding perp = orthogonal_complement(v);
  CHECK(perp.basis.rows() == 3);
  for (std::size_t i = 0; i < perp.basis.rows(); ++i) CHECK(u2.pair(perp.basis.row(i), IntVector{1, 3, 0, 0}) == 0);
  const LatticeInvariants inv = lattice_invariants(perp.induced());
  CHECK(inv.disc == 6);
  CHECK(inv.signature == Signature{1, 2, 0});

  const Saturation s = saturate(SublatticeEmbedding(u2, IntMatrix{{2, 0, 0, 0}, {0, 0, 2, 2}}));
  CHECK(s.index == 4);
  CHECK_THROWS_AS(gram_of(u2, {IntVector{1, 2}}), Error);
}

TEST_CASE("overlattice glue errors") {
  const Lattice l = direct_sum(rank_one(8), hyperbolic_plane());
  const Overlattice o = overlattice_from_glue(l, GlueVector{{1, 0, 0}, 2});
  CHECK(o.index == 2);
  CHECK(o.lattice.gram()(0, 0) == 2);
  CHECK_THROWS_AS(overlattice_from_glue(l, GlueVector{{1, 0, 0}, 3}), Error);
  CHECK_THROWS_AS(overlattice_from_glue(l, GlueVector{{2, 0, 0}, 1}), Error);
  CHECK_THROWS_AS(overlattice_from_glue(l, GlueVector{{0, 1, 0}, 2}), Error);
  try {
    overlattice_from_glue(l, GlueVector{{1, 0, 0}, 3});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIntegralPairing);
  }
  // (4) glued by 1/2: square 1 is odd
  try {
    overlattice_from_glue(rank_one(4), GlueVector{{1}, 2});
    FAIL("expected NotEven");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEven);
  }
}

TEST_CASE("definite isometry search and short vectors") {
  const IntMatrix a2{{2, 1}, {1, 2}};
  CHECK(vectors_of_norm(a2, 2).size() == 6);
  const IntMatrix e8 = Int(-1) * e8_negative().gram();
  CHECK(vectors_of_norm(e8, 2).size() == 240);
  const auto t = find_isometry_definite(Lattice(a2), Lattice(IntMatrix{{2, -1}, {-1, 2}}));
  REQUIRE(t.has_value());
  CHECK(verify_isometry(Lattice(a2), Lattice(IntMatrix{{2, -1}, {-1, 2}}), *t));
  CHECK_FALSE(find_isometry_definite(Lattice(a2), Lattice(IntMatrix{{2, 0}, {0, 2}})).has_value());
  CHECK_THROWS_AS(find_isometry_definite(hyperbolic_plane(), hyperbolic_plane()), Error);
}
