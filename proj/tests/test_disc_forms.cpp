#include <doctest.h>

#include <random>

#include "disc24/disc_forms.hpp"

using namespace disc24;

namespace {

// Random element with coordinates reduced into the group.
FqfElement random_element(const FiniteQuadraticForm& f, std::mt19937_64& rng) {
  FqfElement x;
  for (const auto& d : f.invariant_factors) x.push_back(static_cast<std::int64_t>(rng() % d.get_ui()));
  return x;
}

}  // namespace

TEST_CASE("cyclic forms by hand") {
  const FiniteQuadraticForm six = discriminant_form(rank_one(-6));
  CHECK(six.order() == 6);
  CHECK(six.q({1}) == Rat(11, 6));
  CHECK(six.b({1}, {1}) == Rat(5, 6));
  CHECK(six.element_order({2}) == 3);

  const FiniteQuadraticForm a2 = discriminant_form(a2_like());
  CHECK(a2.order() == 3);
  CHECK(a2.q(a2.reduce({1})) == Rat(4, 3));

  CHECK(discriminant_form(hyperbolic_plane()).order() == 1);
  CHECK_THROWS_AS(discriminant_form(Lattice(IntMatrix{{1, 1}, {1, 1}})), Error);
}

TEST_CASE("bilinear form is symmetric and q is compatible with b") {
  std::mt19937_64 rng(5);
  const Lattice l = direct_sum(direct_sum(a2_like(), rank_one(8)), rank_one(-6));
  const FiniteQuadraticForm f = discriminant_form(l);
  CHECK(f.order() == 144);
  for (int t = 0; t < 200; ++t) {
    const FqfElement x = random_element(f, rng), y = random_element(f, rng);
    CHECK(f.b(x, y) == f.b(y, x));
    FqfElement sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    sum = f.reduce(sum);
    // q(x+y) = q(x) + q(y) + 2b(x,y) mod 2
    CHECK(reduce_mod(f.q(sum) - f.q(x) - f.q(y) - 2 * f.b(x, y), 2) == 0);
  }
}

TEST_CASE("isomorphism test is reflexive and detects different forms") {
  const FiniteQuadraticForm a = discriminant_form(rank_one(-6));
  // Z/2 + Z/3 with q = 1/2 + 4/3 = 11/6 on the generator
  const FiniteQuadraticForm b = discriminant_form(direct_sum(rank_one(2), a2_like()));
  // q = 3/2 + 4/3 = 5/6 instead
  const FiniteQuadraticForm c = discriminant_form(direct_sum(rank_one(-2), a2_like()));
  CHECK(fqf_isomorphic(a, a));
  CHECK(fqf_isomorphic(a, b));
  CHECK(fqf_isomorphic(b, a));
  CHECK_FALSE(fqf_isomorphic(a, c));
  CHECK_FALSE(fqf_isomorphic(c, a));
  CHECK_FALSE(fqf_isomorphic(a, discriminant_form(rank_one(6))));
  CHECK_FALSE(fqf_isomorphic(a, discriminant_form(rank_one(-12))));
}

TEST_CASE("isotropic quotient of (8) + U by the glue") {
  const FiniteQuadraticForm f = discriminant_form(direct_sum(rank_one(8), hyperbolic_plane()));
  CHECK(f.order() == 8);
  const auto iso = isotropic_elements(f);
  // q(k/8) = k^2/8 mod 2 vanishes for k = 0, 4
  CHECK(iso.size() == 2);
  const FiniteQuadraticForm quotient = isotropic_quotient(f, {4});
  CHECK(quotient.order() == 2);
  CHECK(fqf_isomorphic(quotient, discriminant_form(rank_one(2))));
}
