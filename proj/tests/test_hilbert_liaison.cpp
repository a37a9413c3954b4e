#include <doctest.h>

#include "disc24/hilbert_liaison.hpp"
#include "oracles.hpp"

using namespace disc24;

namespace {

long factorial_for_test(long n) { return n <= 1 ? 1 : n * factorial_for_test(n - 1); }

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const HilbertPolynomial p{7, -6, 6};
  CHECK(p.to_string() == "6n^2 - 6n + 7");
  CHECK(p(Rat(2)) == 19);
  CHECK(p.degree() == 2);
  CHECK((p - p).degree() == -1);
  CHECK((p - p).to_string() == "0");
  CHECK(HilbertPolynomial{0, 1}.to_string() == "n");
  CHECK(HilbertPolynomial(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)}).integral_on(-5, 5));
  CHECK_FALSE(HilbertPolynomial(std::vector<Rat>{Rat(0), Rat(1, 2)}).integral_on(0, 1));
  CHECK_THROWS_AS(HilbertPolynomial({1, 1, 1, 1, 1, 1, 1}), Error);
}

TEST_CASE("complete intersections agree with the Hilbert series oracle") {
  const std::vector<CIProfile> profiles = {{5, {2, 2, 3}}, {4, {2, 2, 3}}, {3, {2, 2}}, {3, {3}},
                                           {4, {2, 3}},    {5, {2}},       {2, {1, 1}}, {5, {3, 3}}};
  for (const auto& p : profiles) {
    const HilbertPolynomial hp = ci_hilbert_poly(p);
    long dsum = 0;
    for (long d : p.degrees) dsum += d;
    const auto hf = oracle::ci_hilbert_function(p.ambient_dim, p.degrees, 30);
    // Hilbert function equals the polynomial past the regularity index
    for (long n = dsum; n <= 30; ++n) CHECK(hp(Rat(n)) == Rat(hf[static_cast<std::size_t>(n)]));
    CHECK(hp.leading() * Rat(factorial_for_test(p.dimension())) == Rat(p.degree()));
  }
}

TEST_CASE("fixed values") {
  CHECK(ci_hilbert_poly({5, {2, 2, 3}}).to_string() == "6n^2 - 6n + 7");
  // curve of degree 12 with omega = O(2): 2g - 2 = 24
  CHECK(ci_hilbert_poly({4, {2, 2, 3}}) == curve_hp(12, 13));
  CHECK(ci_hilbert_poly({4, {2, 2, 3}}).to_string() == "12n - 12");
  CHECK(ci_hilbert_poly({3, {2, 2}}) == curve_hp(4, 1));
  CHECK(smooth_sextic_del_pezzo_hp().to_string() == "3n^2 + 3n + 1");
  CHECK(nodal_sextic_del_pezzo_hp().to_string() == "3n^2 + 3n");
  CHECK(curve_hp(12, 8).to_string() == "12n - 7");
  CHECK(residual_hp(ci_hilbert_poly({5, {2, 2, 3}}), nodal_sextic_del_pezzo_hp(), curve_hp(12, 8)) ==
        nodal_sextic_del_pezzo_hp());
}

TEST_CASE("Serre duality symmetry") {
  for (long r = 2; r <= 5; ++r)
    for (long d1 = 1; d1 <= 3; ++d1)
      for (long d2 = 1; d2 <= 3; ++d2) {
        const CIProfile p{r, {d1, d2}};
        const HilbertPolynomial hp = ci_hilbert_poly(p);
        const long sign = p.dimension() % 2 == 0 ? 1 : -1;
        for (long n = -4; n <= 8; ++n) CHECK(hp(Rat(n)) == Rat(sign) * hp(Rat(p.dualizing_twist() - n)));
      }
}

TEST_CASE("adjunction, gluing and liaison") {
  CHECK(adjunction_genus(24, -12) == 7);
  CHECK(adjunction_genus(6, -6) == 1);
  CHECK(adjunction_genus(-2, 0) == 0);
  CHECK_THROWS_AS(adjunction_genus(1, 0), Error);
  CHECK(glue_points_genus(5, 4) == 8);
  CHECK(glue_points_genus(0, 1) == 0);
  CHECK_THROWS_AS(glue_points_genus(0, 0), Error);

  const LinkedCurve c = liaison_link({4, {2, 2, 3}}, 6, 1);
  CHECK(c.degree == 6);
  CHECK(c.genus == 1);
  const LinkedCurve tc = liaison_link({3, {2, 2}}, 1, 0);
  CHECK(tc.degree == 3);
  CHECK(tc.genus == 0);
  const LinkedCurve back = liaison_link({3, {2, 2}}, tc.degree, tc.genus);
  CHECK(back.degree == 1);
  CHECK(back.genus == 0);
  // conic and its residual conic in a (2,2) complete intersection
  const LinkedCurve conic = liaison_link({3, {2, 2}}, 2, 0);
  CHECK(conic.degree == 2);
  CHECK(conic.genus == 0);
  CHECK_THROWS_AS(liaison_link({5, {2, 2, 3}}, 6, 1), Error);
  CHECK_THROWS_AS(ci_hilbert_poly({2, {2, 2, 2}}), Error);
  CHECK_THROWS_AS(ci_hilbert_poly({3, {}}), Error);
  CHECK_THROWS_AS(ci_hilbert_poly({3, {0}}), Error);
}
