#include <doctest.h>

#include <random>

#include "disc24/disc_forms.hpp"
#include "disc24/mukai_twisted.hpp"

using namespace disc24;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 6);
  Rat q{Int(num(rng)), Int(den(rng))};
  q.canonicalize();
  return q;
}

MukaiVector random_mukai(std::mt19937_64& rng) {
  MukaiVector v;
  v.r = random_rat(rng);
  v.s = random_rat(rng);
  for (auto& c : v.d.c) c = random_rat(rng);
  return v;
}

}  // namespace

TEST_CASE("K3 lattice basics") {
  CHECK(k3_lattice().rank() == 22);
  CHECK(k3_pairing(k3_basis("u1"), k3_basis("v1")) == 1);
  CHECK(k3_pairing(k3_basis("u1"), k3_basis("u1")) == 0);
  CHECK(k3_pairing(k3_basis("e1"), k3_basis("e1")) == -2);
  CHECK(k3_pairing(degree_six_class(), degree_six_class()) == 6);
  CHECK_THROWS_AS(k3_basis("w1"), Error);
  CHECK(to_string(degree_six_class()) == "u1 + 3v1");
}

TEST_CASE("parser") {
  CHECK(to_string(parse_mukai("2-(v1+u2-v2)")) == "2 - v1 - u2 + v2");
  CHECK(parse_mukai("pt") == parse_mukai("[pt]"));
  CHECK(parse_mukai("f") == parse_mukai("u1+3v1"));
  CHECK(parse_mukai("3*u1") == parse_mukai("3u1"));
  CHECK(parse_mukai("1/2[pt]").s == Rat(1, 2));
  CHECK(parse_mukai("-(-(1))").r == 1);
  CHECK_THROWS_AS(parse_mukai("2+"), Error);
  CHECK_THROWS_AS(parse_mukai("(u1"), Error);
  CHECK_THROWS_AS(parse_mukai("q7"), Error);
  CHECK_THROWS_AS(parse_mukai("1/0"), Error);
}

TEST_CASE("Mukai pairing sign convention") {
  const MukaiVector one = parse_mukai("1");
  const MukaiVector pt = parse_mukai("[pt]");
  CHECK(mukai_pairing(one, pt) == -1);
  CHECK(mukai_pairing(one, one) == 0);
  // v(O_S) = (1,0,1) squares to -2
  CHECK(mukai_pairing(one + pt, one + pt) == -2);
}

TEST_CASE("exp(B) preserves the pairing and composes, 200 exact trials") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const MukaiVector x = random_mukai(rng), y = random_mukai(rng);
    BField b1, b2;
    for (auto& c : b1.c) c = random_rat(rng);
    for (auto& c : b2.c) c = random_rat(rng);
    CHECK(mukai_pairing(exp_b(x, b1), exp_b(y, b1)) == mukai_pairing(x, y));
    CHECK(exp_b(exp_b(x, b1), b2) == exp_b(x, b1 + b2));
    CHECK(exp_b(exp_b(x, b1), Rat(-1) * b1) == x);
  }
}

TEST_CASE("B-field kernel") {
  const SublatticeEmbedding f_perp = orthogonal_complement(
      SublatticeEmbedding(k3_lattice(), IntMatrix::from_rows({degree_six_class().to_integer()}, kK3Rank)));
  CHECK(f_perp.basis.rows() == 21);
  const BKernel k = b_kernel_sublattice(standard_b_field(), f_perp);
  CHECK(k.index == 2);
  CHECK(lattice_invariants(k.sublattice.induced()).disc == 24);
  CHECK(b_kernel_sublattice(BField{}, f_perp).index == 1);
  BField third;
  third.c[0] = Rat(1, 3);  // u1/3 pairs with a u1 - 3a v1 + ... integrally
  CHECK(b_kernel_sublattice(third, f_perp).index == 1);
  third.c[2] = Rat(1, 3);  // u2/3 does not
  CHECK(b_kernel_sublattice(third, f_perp).index == 3);
  CHECK(fqf_isomorphic(discriminant_form(f_perp.induced()), discriminant_form(rank_one(-6))));
}

TEST_CASE("lattice chain") {
  for (const auto& c : fano24_chain()) {
    INFO(c.name << ": " << c.actual);
    CHECK(c.status == CheckStatus::Pass);
  }
  for (const auto& c : p4_embedding_check()) {
    INFO(c.name << ": " << c.actual);
    CHECK(c.status == CheckStatus::Pass);
  }
  CHECK(lattice_invariants(cubic_disc24_lattice()).disc == 24);
  CHECK(lattice_invariants(degree_six_primitive_lattice()).disc == 6);
  CHECK(lattice_invariants(fano_complement_lattice()).disc == 24);
  CHECK(abs(determinant(degree_six_certificate())) == 1);
}

TEST_CASE("criterion matrix") {
  // det [[3,6,m],[6,20,a],[m,a,s]] = 24 s - 3 a^2 + 12 a m - 20 m^2
  for (long m = -2; m <= 2; ++m)
    for (long a = -3; a <= 3; ++a)
      for (long s = -2; s <= 2; ++s) {
        const CriterionMatrix c = criterion_matrix(m, a, s);
        CHECK(c.determinant == 24 * s - 3 * a * a + 12 * a * m - 20 * m * m);
        CHECK(c.criterion == (a % 2 != 0));
      }
}
