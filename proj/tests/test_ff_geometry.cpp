#include <doctest.h>

#include <algorithm>
#include <set>

#include "disc24/ff_geometry.hpp"

using namespace disc24;

namespace {

FpPoly mono(const PrimeField& f, std::size_t nvars, Exponent e, std::int64_t c = 1) {
  return make_poly(f, nvars, {{std::move(e), f.from_int(c)}});
}

// Every normalized point of P^n(F_p), by nested counting.
FpRows all_points(const PrimeField& f, std::size_t n) {
  FpRows out;
  const std::uint32_t p = f.p();
  for (std::size_t lead = 0; lead <= n; ++lead) {
    const std::size_t free = n - lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t k = 0; k < total; ++k) {
      FpVector x(n + 1, 0);
      x[lead] = 1;
      std::uint64_t r = k;
      for (std::size_t i = n; i > lead; --i) {
        x[i] = static_cast<Fp>(r % p);
        r /= p;
      }
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FpRows brute_zeros(const PrimeField& f, const std::vector<FpPoly>& forms, std::size_t n) {
  FpRows out;
  for (const auto& x : all_points(f, n))
    if (std::all_of(forms.begin(), forms.end(), [&](const FpPoly& g) { return evaluate(f, g, x) == 0; }))
      out.push_back(x);
  return out;
}

Parametrization twisted_cubic(const PrimeField& f) {
  std::vector<FpPoly> forms;
  for (std::uint8_t i = 0; i <= 3; ++i) forms.push_back(mono(f, 3, {static_cast<std::uint8_t>(3 - i), i, 0}));
  return Parametrization{f, Domain::P2, 3, forms, {}};
}

}  // namespace

TEST_CASE("prime field") {
  const PrimeField f(31);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.pow(3, 30) == 1);
  CHECK(f.from_int(-1) == 30);
  CHECK(f.neg(0) == 0);
  CHECK(PrimeField::is_prime(2147483647));
  CHECK_FALSE(PrimeField::is_prime(2147483649ULL));
  CHECK_THROWS_AS(PrimeField(15), Error);
  CHECK_THROWS_AS(PrimeField(3), Error);
  CHECK_THROWS_AS(PrimeField(1ULL << 31), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("row reduction and nullspace") {
  const PrimeField f(10007);
  FpRows m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(fp_rank(f, m) == 2);
  const FpRows k = nullspace(f, m, 3);
  REQUIRE(k.size() == 1);
  for (const auto& row : m) {
    Fp s = 0;
    for (std::size_t j = 0; j < 3; ++j) s = f.add(s, f.mul(row[j], k[0][j]));
    CHECK(s == 0);
  }
}

TEST_CASE("counter RNG is reproducible and stream-separated") {
  CounterRng a(5, "x"), b(5, "x"), c(5, "y"), d(6, "x");
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
  CHECK(va != d.next());
  CHECK(stream_id("abc") == stream_id("abc"));
  CHECK(stream_id("abc") != stream_id("abd"));
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  auto w = v;
  CounterRng r1(1, "shuffle"), r2(1, "shuffle");
  deterministic_shuffle(v, r1);
  deterministic_shuffle(w, r2);
  CHECK(v == w);
  std::sort(w.begin(), w.end());
  for (int i = 0; i < 50; ++i) CHECK(w[i] == i);
  CounterRng r(0, "below");
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("monomials and polynomials") {
  CHECK(monomial_count(6, 2) == 21);
  CHECK(monomial_count(6, 3) == 56);
  const auto m = monomials(3, 2);
  CHECK(m.size() == 6);
  CHECK(m.front() == Exponent{2, 0, 0});
  CHECK(m.back() == Exponent{0, 0, 2});
  const PrimeField f(31);
  // x0^2 - x1 x2
  const FpPoly q = make_poly(f, 3, {{{0, 1, 1}, f.from_int(-1)}, {{2, 0, 0}, 1}});
  CHECK(evaluate(f, q, {2, 1, 4}) == 0);
  CHECK(to_string(derivative(f, q, 0)) == to_string(mono(f, 3, {1, 0, 0}, 2)));
  CHECK(linear_combination(f, {q, q}, {1, f.from_int(-1)}).is_zero());
  CHECK(to_string(FpVector{1, 2, 3}) == "[1,2,3]");
  CHECK(normalize(f, {0, 2, 4}) == FpVector{0, 1, 2});
  CHECK_THROWS_AS(normalize(f, {0, 0}), Error);
}

TEST_CASE("point enumeration matches brute force") {
  const PrimeField f(7);
  CHECK(projective_point_count(7, 2) == 57);
  // smooth conic x0^2 + x1^2 - 3 x2^2 has p + 1 points
  const FpPoly conic = make_poly(f, 3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, f.from_int(-3)}});
  const FpRows z = common_zeros(f, {conic}, 1);
  CHECK(z.size() == 8);
  CHECK(z == brute_zeros(f, {conic}, 2));
  // two quadrics in P^3, several thread counts
  const PrimeField g(11);
  const FpPoly q1 = make_poly(g, 4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, g.from_int(-1)}});
  const FpPoly q2 = make_poly(g, 4, {{{2, 0, 0, 0}, 1}, {{0, 0, 1, 1}, 3}, {{0, 2, 0, 0}, g.from_int(-2)}});
  const FpRows expect = brute_zeros(g, {q1, q2}, 3);
  for (unsigned t : {1u, 2u, 3u, 8u}) CHECK(common_zeros(g, {q1, q2}, t) == expect);
  CHECK(singular_scan(f, conic, 2).empty());
  // the cone x0 x1 = 0 in P^2 is singular at (0,0,1)
  const FpRows sing = singular_scan(f, mono(f, 3, {1, 1, 0}), 1);
  REQUIRE(sing.size() == 1);
  CHECK(sing[0] == FpVector{0, 0, 1});
}

TEST_CASE("interpolated ideals of rational normal curves") {
  const PrimeField f(10007);
  const Parametrization c = twisted_cubic(f);
  const ProjPointSet pts = sample_points(c, 60, 3);
  CHECK(pts.points.size() == 60);
  std::set<FpVector> distinct(pts.points.begin(), pts.points.end());
  CHECK(distinct.size() == 60);
  const IdealPiece q = ideal_piece(f, pts, 2);
  CHECK(q.dim() == 3);
  CHECK(ideal_piece(f, pts, 1).dim() == 0);
  // cubics: 20 - 10
  CHECK(ideal_piece(f, pts, 3).dim() == 10);
  CHECK(vanishes_on(f, q, sample_points(c, 20, 99).points));
  CHECK_FALSE(q.vanishes_at(f, {1, 1, 1, 2}));
  CHECK(pts.to_text().rfind("10007 3\n", 0) == 0);

  ProjPointSet few = pts;
  few.points.resize(10);
  CHECK_THROWS_AS(ideal_piece(f, few, 2), Error);
  const PrimeField small(29);
  CHECK_THROWS_AS(ideal_piece(small, sample_points(twisted_cubic(small), 20, 0), 2), Error);
}

TEST_CASE("sampling a tiny domain runs out") {
  const PrimeField f(5);
  CHECK_THROWS_AS(sample_points(twisted_cubic(f), 40, 0), Error);
  try {
    sample_points(twisted_cubic(f), 40, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExhaustedDomain);
  }
}

TEST_CASE("nodal del Pezzo construction") {
  const PrimeField f(10007);
  const NodalDelPezzo w = construct_nodal_del_pezzo(f, 0);
  CHECK(w.nodal.target_dim == 5);
  CHECK(w.nodal.image(w.u_plus) == w.w0);
  CHECK(w.nodal.image(w.u_minus) == w.w0);
  const NodeCertificate c = node_certificate(w.nodal, w.u_plus, w.u_minus);
  CHECK(c.branch_rank_plus == 2);
  CHECK(c.branch_rank_minus == 2);
  CHECK(c.combined_rank == 4);
  CHECK_THROWS_AS(node_certificate(w.smooth, w.u_plus, w.u_minus), Error);
  // projecting from a point of the surface itself is refused
  CHECK_THROWS_AS(linear_projection(w.smooth, {*w.smooth.image(w.u_plus)}), Error);
  CHECK_THROWS_AS(construct_nodal_del_pezzo(PrimeField(7), 0, 0), Error);

  const ProjPointSet pts = sample_points(w.nodal, 240, 0);
  const IdealPiece q2 = ideal_piece(f, pts, 2);
  CHECK(q2.dim() == 3);
  const PlaneContainment pc = plane_containment_check(w, q2, 0);
  CHECK(pc.planes.nodal_cubic_dim == 1);
  CHECK(pc.planes.nodal_cubic_dim_prime == 1);
  CounterRng rng(0, "test-plane");
  CHECK_FALSE(plane_contained(f, q2, random_plane_through(f, w.w0, rng), rng, 16));
  IdealPiece empty = q2;
  empty.basis.clear();
  CHECK_THROWS_AS(plane_containment_check(w, empty, 0), Error);
}

TEST_CASE("construction is deterministic in the seed") {
  const PrimeField f(10007);
  const NodalDelPezzo a = construct_nodal_del_pezzo(f, 4);
  const NodalDelPezzo b = construct_nodal_del_pezzo(f, 4);
  CHECK(a.w0 == b.w0);
  CHECK(sample_points(a.nodal, 30, 1).points == sample_points(b.nodal, 30, 1).points);
  const TwoNodalScroll t = construct_two_nodal_scroll(f, 4);
  CHECK(t.nodal.target_dim == 5);
  for (int i = 0; i < 2; ++i) {
    CHECK(t.nodal.image(t.preimages[i][0]) == t.nodes[i]);
    CHECK(node_certificate(t.nodal, t.preimages[i][0], t.preimages[i][1]).transverse);
  }
}
