#include "disc24/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "disc24/disc_forms.hpp"
#include "disc24/ff_geometry.hpp"
#include "disc24/hilbert_liaison.hpp"
#include "disc24/lattices.hpp"
#include "disc24/mukai_twisted.hpp"
#include "disc24/scroll_calculus.hpp"

#ifndef DISC24_VERSION
#define DISC24_VERSION "dev"
#endif

namespace disc24 {

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

const Check* find_check(const std::vector<Check>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Runs `body`; a library error becomes one failed check instead of
// aborting the suite.
void guarded(std::vector<Check>& checks, const std::string& block, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    checks.push_back(bool_check(block + "_error", false, "no error", e.what(), Provenance::Derived, "invented"));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice", "mukai", "hilbert", "scroll", "geometry", "all"};
  return names;
}

// ---------------------------------------------------------------------------

std::vector<Check> lattice_suite() {
  std::vector<Check> checks = fano24_chain();

  Fano24Options identity;
  identity.involution = IntMatrix::identity(2);
  const std::vector<Check> control = fano24_chain(identity);
  const Check* iso = find_check(control, "involution_is_isometry");
  const Check* wmap = find_check(control, "involution_sends_W_to_4h2_minus_W");
  const bool separated = iso && wmap && iso->status == CheckStatus::Pass && wmap->status == CheckStatus::Fail;
  checks.push_back(bool_check("identity_involution_control", separated, "isometry pass, W map fail",
                              std::string("isometry ") + (iso ? std::string(status_name(iso->status)) : "missing") +
                                  ", W map " + (wmap ? std::string(status_name(wmap->status)) : "missing"),
                              Provenance::Trivial, "identity substituted for W->4h^2-W"));

  Fano24Options third;
  third.glue_denominator = 3;
  std::string outcome = "no error";
  try {
    fano24_chain(third);
  } catch (const Error& e) {
    outcome = std::string(error_code_name(e.code()));
  }
  checks.push_back(compare_check("glue_denominator_three_rejected", "NotIntegralPairing", outcome,
                                 Provenance::Derived, "(8)-generator / 3 pairs to 8/3"));

  const FiniteQuadraticForm six = discriminant_form(rank_one(-6));
  checks.push_back(compare_check("rank_one_minus_six_form", "Z/6 q=[11/6] mod 2 b=[[5/6]]", six.describe(),
                                 Provenance::Literature, "discriminant group generated by (u1-3v1)/6"));
  return checks;
}

// ---------------------------------------------------------------------------

namespace {

Rat random_rational(CounterRng& rng) {
  const long num = static_cast<long>(rng.below(11)) - 5;
  const long den = 1 + static_cast<long>(rng.below(4));
  Rat q{Int(num), Int(den)};
  q.canonicalize();
  return q;
}

MukaiVector random_integral_mukai(CounterRng& rng) {
  MukaiVector v;
  v.r = static_cast<long>(rng.below(11)) - 5;
  v.s = static_cast<long>(rng.below(11)) - 5;
  for (auto& c : v.d.c) c = static_cast<long>(rng.below(11)) - 5;
  return v;
}

}  // namespace

std::vector<Check> mukai_suite(std::uint64_t seed, int trials) {
  std::vector<Check> checks;
  const MukaiVector twisted = parse_mukai("2-(v1+u2-v2)");
  const MukaiVector f = parse_mukai("f");
  const MukaiVector pt = parse_mukai("[pt]");
  checks.push_back(compare_check("twisted_class_matrix", "[[-2,-1,-2],[-1,6,0],[-2,0,0]]",
                                 gram_of_mukai({twisted, f, pt}).to_string(), Provenance::Literature,
                                 "intersection matrix of {2-(v1+u2-v2), f, [pt]}"));
  checks.push_back(compare_check("f_squared", "6", mukai_pairing(f, f).get_str(), Provenance::Literature,
                                 "f = u1 + 3v1, f.f = 6"));

  const MukaiVector v = parse_mukai("2-(v1+u2-v2)+f");
  const MukaiVector g = parse_mukai("-6+3(v1+u2-v2)-f+2[pt]");
  const MukaiVector e = parse_mukai("2-(v1+u2-v2)+f+[pt]");
  checks.push_back(compare_check("v_expansion", "2 + u1 + 2v1 - u2 + v2", to_string(v), Provenance::Literature,
                                 "v = 2-(v1+u2-v2)+f"));
  checks.push_back(compare_check("g_expansion", "-6 - u1 + 3u2 - 3v2 + 2[pt]", to_string(g),
                                 Provenance::Literature, "g = -6+3(v1+u2-v2)-f+2[pt]"));
  checks.push_back(compare_check("v_squared", "2", mukai_pairing(v, v).get_str(), Provenance::Derived,
                                 "Mukai vector v"));
  const auto report = orthogonality_report(v, {g, e, pt});
  checks.push_back(compare_check("v_orthogonal_to_g_E", "<v,g>=0 <v,E>=0 <v,[pt]>=-2",
                                 "<v,g>=" + report[0].pairing.get_str() + " <v,E>=" + report[1].pairing.get_str() +
                                     " <v,[pt]>=" + report[2].pairing.get_str(),
                                 Provenance::Literature, "orthogonal complement of v contains g, E"));
  checks.push_back(compare_check("g_E_gram", "[[6,6],[6,-2]]", gram_of_mukai({g, e}).to_string(),
                                 Provenance::Literature, "table of g, E agrees with the Fano-side form"));

  const BField b = standard_b_field();
  const K3Vector fc = degree_six_class();
  checks.push_back(compare_check("B_dot_f_and_B_squared", "B.f=1/2 B^2=-1/2",
                                 "B.f=" + k3_pairing(b, fc).get_str() + " B^2=" + k3_pairing(b, b).get_str(),
                                 Provenance::Literature, "B = (v1+u2-v2)/2"));
  MukaiVector f_only;
  f_only.d = fc;
  checks.push_back(compare_check("exp_B_of_f", "u1 + 3v1 + 1/2*[pt]", to_string(exp_b(f_only, b)),
                                 Provenance::Literature, "B wedge f = [pt]/2"));
  MukaiVector one;
  one.r = 1;
  checks.push_back(compare_check("exp_f_of_unit", "1 + u1 + 3v1 + 3[pt]", to_string(exp_b(one, fc)),
                                 Provenance::Literature, "exp(f) twists by O(f), f^2/2 = 3"));

  const SublatticeEmbedding f_perp =
      orthogonal_complement(SublatticeEmbedding(k3_lattice(), IntMatrix::from_rows({fc.to_integer()}, kK3Rank)));
  const BKernel kernel = b_kernel_sublattice(b, f_perp);
  checks.push_back(compare_check("b_kernel_index", "2", kernel.index.get_str(), Provenance::Literature,
                                 "T(S,alpha) index-two sublattice of f^perp"));
  checks.push_back(compare_check("zero_B_kernel_index", "1", b_kernel_sublattice(BField{}, f_perp).index.get_str(),
                                 Provenance::Trivial, "B = 0"));
  const FiniteQuadraticForm perp_form = discriminant_form(f_perp.induced());
  const bool perp_iso = fqf_isomorphic(perp_form, discriminant_form(rank_one(-6)));
  checks.push_back(bool_check("f_perp_discriminant_form", perp_iso, "Z/6 with q=-1/6", perp_form.describe(),
                              Provenance::Literature, "discriminant group generated by (u1-3v1)/6"));

  // Smallest r with r * exp(B)(1,0,0) integral.
  long minimal_r = 0;
  for (long r = 1; r <= 16 && !minimal_r; ++r)
    if ((Rat(r) * exp_b(one, b)).is_integral()) minimal_r = r;
  checks.push_back(compare_check("twisted_unit_minimal_rank", "4", str(minimal_r), Provenance::Derived,
                                 "r(1+B+B^2/2) integral"));

  for (const auto& c : p4_embedding_check()) checks.push_back(c);

  CounterRng rng(seed, "exp-b-invariance");
  int preserved = 0, action = 0;
  for (int t = 0; t < trials; ++t) {
    BField b1, b2;
    for (auto& c : b1.c) c = random_rational(rng);
    for (auto& c : b2.c) c = random_rational(rng);
    const MukaiVector x = random_integral_mukai(rng);
    const MukaiVector y = random_integral_mukai(rng);
    if (mukai_pairing(exp_b(x, b1), exp_b(y, b1)) == mukai_pairing(x, y)) ++preserved;
    if (exp_b(exp_b(x, b2), b1) == exp_b(x, b1 + b2)) ++action;
  }
  checks.push_back(compare_check("exp_B_preserves_pairing", str(static_cast<long>(trials)) + "/" + str(static_cast<long>(trials)),
                                 str(static_cast<long>(preserved)) + "/" + str(static_cast<long>(trials)),
                                 Provenance::Literature, "pairing invariant under exp(B)"));
  checks.push_back(compare_check("exp_B_group_action", str(static_cast<long>(trials)) + "/" + str(static_cast<long>(trials)),
                                 str(static_cast<long>(action)) + "/" + str(static_cast<long>(trials)),
                                 Provenance::Derived, "exp(B1) exp(B2) = exp(B1+B2)"));

  const CriterionMatrix crit = criterion_matrix(0, 3, 0);
  checks.push_back(compare_check("criterion_matrix_0_3_0", "det=-27 criterion=true",
                                 "det=" + crit.determinant.get_str() + " criterion=" + yes_no(crit.criterion),
                                 Provenance::Derived, "rank-three lattice <h^2,W,M> with a odd"));
  return checks;
}

// ---------------------------------------------------------------------------

std::vector<Check> hilbert_suite() {
  std::vector<Check> checks;
  const CIProfile yx{5, {2, 2, 3}};
  const HilbertPolynomial total = ci_hilbert_poly(yx);
  checks.push_back(compare_check("ci_P5_2_2_3", "6n^2 - 6n + 7", total.to_string(), Provenance::Literature,
                                 "chi(O_{Y cap X}(n))"));
  const HilbertPolynomial w = nodal_sextic_del_pezzo_hp();
  checks.push_back(compare_check("nodal_del_pezzo_hp", "3n^2 + 3n", w.to_string(), Provenance::Literature,
                                 "chi(O_W(n)) = chi(O_W~(n)) - 1"));
  const HilbertPolynomial conductor = curve_hp(12, 8);
  checks.push_back(compare_check("conductor_curve_hp", "12n - 7", conductor.to_string(), Provenance::Literature,
                                 "chi(O_B(n))"));
  const HilbertPolynomial residual = residual_hp(total, w, conductor);
  checks.push_back(compare_check("residual_hp", "3n^2 + 3n", residual.to_string(), Provenance::Literature,
                                 "chi(O_W'(n)) = chi(O_{Y cap X}(n)) - chi(O_W(n)) + chi(O_B(n))"));
  checks.push_back(bool_check("residual_involution", residual_hp(total, residual, conductor) == w, "3n^2 + 3n",
                              residual_hp(total, residual, conductor).to_string(), Provenance::Trivial,
                              "residuation applied twice"));

  checks.push_back(compare_check("adjunction_minus_2K", "7", str(adjunction_genus(24, -12)), Provenance::Literature,
                                 "[B^] = -2K has arithmetic genus seven"));
  checks.push_back(compare_check("adjunction_minus_K", "1", str(adjunction_genus(6, -6)), Provenance::Literature,
                                 "genus one, degree six"));
  checks.push_back(compare_check("glue_four_points", "8", str(glue_points_genus(5, 4)), Provenance::Literature,
                                 "four points glued to a quadruple point"));
  checks.push_back(compare_check("glue_two_nodes", "7", str(glue_points_genus(glue_points_genus(5, 2), 2)),
                                 Provenance::Literature, "nodes at w+, w-"));

  const CIProfile curve{4, {2, 2, 3}};
  const LinkedCurve linked = liaison_link(curve, 6, 1);
  checks.push_back(compare_check("liaison_genus_one_sextic", "(6,1)",
                                 "(" + str(linked.degree) + "," + str(linked.genus) + ")", Provenance::Literature,
                                 "C' also genus one, degree six"));
  checks.push_back(compare_check("dualizing_twist_P4_2_2_3", "2", str(curve.dualizing_twist()),
                                 Provenance::Literature, "omega_D = O_D(2)"));
  const LinkedCurve cubic = liaison_link(CIProfile{3, {2, 2}}, 1, 0);
  checks.push_back(compare_check("liaison_line_twisted_cubic", "(3,0)",
                                 "(" + str(cubic.degree) + "," + str(cubic.genus) + ")", Provenance::Derived,
                                 "pencil of quadrics in P^3"));
  checks.push_back(compare_check("ci_P4_2_2_3", "12n - 12", ci_hilbert_poly(curve).to_string(), Provenance::Derived,
                                 "degree-12 curve with omega = O(2)"));

  // chi(O(n)) = (-1)^dim chi(O(k - n)) with omega = O(k)
  const std::vector<CIProfile> profiles = {{5, {2, 2, 3}}, {4, {2, 2, 3}}, {2, {1}},    {3, {2, 2}},
                                           {3, {3}},       {4, {3}},       {5, {2, 3}}, {5, {2, 2, 2}}};
  bool symmetric = true, integral = true;
  for (const auto& p : profiles) {
    const HilbertPolynomial hp = ci_hilbert_poly(p);
    integral = integral && hp.integral_on(-3, 6);
    const long sign = p.dimension() % 2 == 0 ? 1 : -1;
    for (long n = -3; n <= 6; ++n)
      symmetric = symmetric && hp(Rat(n)) == Rat(sign) * hp(Rat(p.dualizing_twist() - n));
  }
  checks.push_back(bool_check("ci_serre_symmetry", symmetric, "true", yes_no(symmetric), Provenance::Derived,
                              "duality on complete intersections"));
  for (const auto& hp : {total, w, conductor, residual, smooth_sextic_del_pezzo_hp()})
    integral = integral && hp.integral_on(-3, 6);
  checks.push_back(bool_check("integer_valued", integral, "true", yes_no(integral), Provenance::Trivial,
                              "values on n in [-3, 6]"));
  return checks;
}

// ---------------------------------------------------------------------------

std::vector<Check> scroll_suite() {
  std::vector<Check> checks;
  const ScrollProfile p321{3, 2, 1};
  checks.push_back(compare_check("h0_E_dual_3_2_1", "7", str(h0_splitting(p321.e_dual())), Provenance::Literature,
                                 "r(a+2) - s global sections"));
  const ScrollInvariants inv = scroll_profile_invariants(p321);
  checks.push_back(compare_check("profile_3_2_1", "n=6 d=4 aut_sigma=11",
                                 "n=" + str(inv.n) + " d=" + str(inv.d) + " aut_sigma=" + str(inv.aut_sigma),
                                 Provenance::Literature, "degree-four three-dimensional scroll"));
  const ScrollInvariants inv223 = scroll_profile_invariants({2, 2, 3});
  checks.push_back(compare_check("profile_2_2_3", "n=7 d=6", "n=" + str(inv223.n) + " d=" + str(inv223.d),
                                 Provenance::Literature, "sextic surface scroll in P^7"));

  bool moduli = true, h0 = true, aut = true, quotient = true;
  for (long r = 2; r <= 6; ++r)
    for (long s = 1; s <= r; ++s)
      for (long a = 1; a <= 6; ++a) {
        const ScrollProfile p{r, s, a};
        const ScrollInvariants v = scroll_profile_invariants(p);
        moduli = moduli && v.moduli1 == v.moduli2 && v.moduli1 == v.n - r * r + 2 * r - 2;
        h0 = h0 && h0_splitting(p.e_dual()) == r * (a + 2) - s;
        aut = aut && v.aut_e == r * r;
        for (long k = 1; k < r; ++k) {
          const SplittingType q = balanced_quotient_splitting(p.e_dual(), k);
          quotient = quotient && q.degree() == p.e_dual().degree() + 2 && q.rank() == k && q.balanced();
        }
      }
  checks.push_back(bool_check("moduli1_equals_moduli2", moduli, "n - r^2 + 2r - 2 for all profiles", yes_no(moduli),
                              Provenance::Literature, "equality of the two moduli counts"));
  checks.push_back(bool_check("h0_formula", h0, "r(a+2) - s for all profiles", yes_no(h0), Provenance::Literature,
                              "r(a+2) - s global sections"));
  checks.push_back(bool_check("aut_E_dimension", aut, "r^2 for all profiles", yes_no(aut), Provenance::Literature,
                              "dim Aut(E) = r^2"));
  checks.push_back(bool_check("balanced_quotient_bookkeeping", quotient, "degree + 2, balanced", yes_no(quotient),
                              Provenance::Derived, "0 -> O(-2) -> E^v -> F^v -> 0"));

  // printed n^3 + 5n - r^2 + 2r + 1 against the expansion n^2 + 5n + 1 - r^2 + 2r
  {
    const long n = inv.n, r = p321.r;
    const long printed = n * n * n + 5 * n - r * r + 2 * r + 1;
    const long expanded = inv.hilb3;
    Check c = bool_check("hilb3_dimension", false,
                         "printed n^3+5n-r^2+2r+1 = " + str(printed) + " at (3,2,1)",
                         "n^2+5n+1-r^2+2r = " + str(expanded) + ", moduli2 = " + str(inv.moduli2) +
                             " = moduli1 = " + str(inv.moduli1),
                         Provenance::Literature, "dimension of Hilb(Xi~ in P^{n+1} with p)");
    c.status = CheckStatus::Flagged;
    checks.push_back(std::move(c));
  }

  for (auto& c : example_table_checks(6)) checks.push_back(std::move(c));

  const SplittingType o4x2({4, 4});
  checks.push_back(compare_check("extension_of_O4_squared", "O(2)^3", extension_bundle_splitting(o4x2).to_string(),
                                 Provenance::Derived, "inverse of the a = 2 example"));
  checks.push_back(compare_check("extension_of_O7", "O(2) + O(3)",
                                 extension_bundle_splitting(SplittingType({7})).to_string(), Provenance::Literature,
                                 "rational normal curve case"));
  bool round_trip = true;
  for (long rank = 1; rank <= 4; ++rank)
    for (long deg = -3; deg <= 12; ++deg) {
      const SplittingType fdual = balanced_splitting(rank, deg);
      round_trip = round_trip && balanced_quotient_splitting(extension_bundle_splitting(fdual), rank) == fdual;
    }
  checks.push_back(bool_check("quotient_extension_round_trip", round_trip, "true", yes_no(round_trip),
                              Provenance::Trivial, "balanced inputs"));

  const SplittingType e({-1, -1, -2});
  checks.push_back(compare_check("xi_cubed", "4", str(pbundle_intersection(e, 3, 0)), Provenance::Literature,
                                 "xi^3 = 4"));
  checks.push_back(compare_check("xi_squared_f", "1", str(pbundle_intersection(e, 2, 1)), Provenance::Literature,
                                 "xi^2 f = 1"));
  const PBundleClass w_class{2, -2};
  const PBundleClass t_class = residual_class_in_pbundle({3, 0}, w_class);
  checks.push_back(compare_check("residual_class", "1xi + 2f", to_string(t_class), Provenance::Literature,
                                 "[W~] = 2xi - 2f, [T~] = xi + 2f"));
  checks.push_back(compare_check("residual_class_degrees", "W~:6 T~:6",
                                 "W~:" + str(class_degree(e, w_class)) + " T~:" + str(class_degree(e, t_class)),
                                 Provenance::Literature, "sextic surfaces"));
  return checks;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kSurfaceSample = 240;
constexpr std::size_t kFreshSample = 100;

std::uint64_t fresh_seed(std::uint64_t seed) { return seed ^ stream_id("fresh-sample"); }

std::string dims(const IdealPiece& a, const IdealPiece& b) {
  return "2:" + std::to_string(a.dim()) + " 3:" + std::to_string(b.dim());
}

}  // namespace

std::vector<Check> geometry_sampling_suite(std::uint64_t p, std::uint64_t seed, int retries) {
  const PrimeField f(p);
  std::vector<Check> checks;

  guarded(checks, "smooth_del_pezzo", [&] {
    const Parametrization dp = parametrize_del_pezzo(f);
    checks.push_back(compare_check("del_pezzo_form_count", "7", str(dp.forms.size()), Provenance::Derived,
                                   "cubics through three points"));
    const IdealPiece q = ideal_piece(f, sample_points(dp, 200, seed), 2);
    checks.push_back(compare_check("smooth_del_pezzo_quadrics", "9", str(q.dim()), Provenance::Derived,
                                   "anticanonical sextic del Pezzo in P^6"));
    const bool fresh = vanishes_on(f, q, sample_points(dp, kFreshSample, fresh_seed(seed)).points);
    checks.push_back(bool_check("smooth_del_pezzo_fresh_points", fresh, "true", yes_no(fresh), Provenance::Trivial,
                                "quadrics vanish on fresh points"));
  });

  guarded(checks, "scroll_P7", [&] {
    const Parametrization sc = parametrize_scroll(f);
    const ProjPointSet pts = sample_points(sc, 300, seed);
    checks.push_back(compare_check("scroll_P7_ideal_dims", "1:0 2:15",
                                   "1:" + str(ideal_piece(f, pts, 1).dim()) + " 2:" + str(ideal_piece(f, pts, 2).dim()),
                                   Provenance::Derived, "(1,3) embedding of P^1 x P^1"));
  });

  std::string retry_log;
  guarded(checks, "nodal_del_pezzo", [&] {
    const NodalDelPezzo w = construct_nodal_del_pezzo(f, seed, retries);
    retry_log += "W:" + std::to_string(w.retries);
    const ProjPointSet pts = sample_points(w.nodal, kSurfaceSample, seed);
    const IdealPiece q2 = ideal_piece(f, pts, 2);
    const IdealPiece q3 = ideal_piece(f, pts, 3);
    checks.push_back(compare_check("nodal_W_ideal_dims", "2:3 3:20", dims(q2, q3), Provenance::Literature,
                                   "three quadrics, h^0(I_W(3)) = 20"));
    const FpRows fresh = sample_points(w.nodal, kFreshSample, fresh_seed(seed)).points;
    const bool fresh_ok = vanishes_on(f, q2, fresh) && vanishes_on(f, q3, fresh);
    checks.push_back(bool_check("nodal_W_fresh_points", fresh_ok, "true", yes_no(fresh_ok), Provenance::Trivial,
                                "ideal vanishes on fresh points"));

    const NodeCertificate node = node_certificate(w.nodal, w.u_plus, w.u_minus);
    checks.push_back(compare_check("nodal_W_node_transverse", "combined tangent rank 4",
                                   "combined tangent rank " + str(node.combined_rank), Provenance::Literature,
                                   "node at w0"));
    std::string unprojected = "identified";
    try {
      node_certificate(w.smooth, w.u_plus, w.u_minus);
    } catch (const Error& e) {
      unprojected = std::string(error_code_name(e.code()));
    }
    checks.push_back(compare_check("unprojected_not_identified", "NotIdentified", unprojected, Provenance::Trivial,
                                   "embedding in P^6 is injective"));

    const PlaneContainment planes = plane_containment_check(w, q2, seed);
    checks.push_back(compare_check("planes_in_quadrics", "P and P' contained", "P and P' contained",
                                   Provenance::Literature,
                                   "spanning planes lie in all quadrics, " + str(planes.points_tested) + " points"));
    checks.push_back(compare_check("nodal_plane_cubics", "N:1 N':1",
                                   "N:" + str(planes.planes.nodal_cubic_dim) +
                                       " N':" + str(planes.planes.nodal_cubic_dim_prime),
                                   Provenance::Literature, "nodal cubic plane curves"));
    std::size_t rejected = 0;
    for (std::uint64_t k = 0; k < 3; ++k) {
      CounterRng rng(seed + k, "random-plane-control");
      if (!plane_contained(f, q2, random_plane_through(f, w.w0, rng), rng, 16)) ++rejected;
    }
    checks.push_back(compare_check("random_plane_control", "3/3 rejected", str(rejected) + "/3 rejected",
                                   Provenance::Derived, "random plane through w0"));

    const CubicChoice x = cubic_through(f, q3, planes.planes, seed, retries);
    retry_log += " X:" + std::to_string(x.retries);
    bool on_w = true;
    for (const auto& pt : fresh) on_w = on_w && evaluate(f, x.cubic, pt) == 0;
    checks.push_back(bool_check("cubic_contains_W", on_w, "true", yes_no(on_w), Provenance::Trivial,
                                "X vanishes on fresh W points"));
  });

  guarded(checks, "two_nodal_scroll", [&] {
    const TwoNodalScroll t = construct_two_nodal_scroll(f, seed, retries);
    retry_log += " T:" + std::to_string(t.retries);
    const ProjPointSet pts = sample_points(t.nodal, kSurfaceSample, seed);
    const IdealPiece q2 = ideal_piece(f, pts, 2);
    const IdealPiece q3 = ideal_piece(f, pts, 3);
    checks.push_back(compare_check("two_nodal_T_ideal_dims", "2:2 3:18", dims(q2, q3), Provenance::Literature,
                                   "dim I_T(2) = 2, dim I_T(3) = 18"));
    const FpRows fresh = sample_points(t.nodal, kFreshSample, fresh_seed(seed)).points;
    const bool fresh_ok = vanishes_on(f, q2, fresh) && vanishes_on(f, q3, fresh);
    checks.push_back(bool_check("two_nodal_T_fresh_points", fresh_ok, "true", yes_no(fresh_ok), Provenance::Trivial,
                                "ideal vanishes on fresh points"));
    std::string ranks;
    bool both = true;
    for (int i = 0; i < 2; ++i) {
      const NodeCertificate c = node_certificate(t.nodal, t.preimages[i][0], t.preimages[i][1]);
      both = both && c.transverse;
      ranks += (i ? " " : "") + std::string("t") + std::to_string(i + 1) + ":" + str(c.combined_rank);
    }
    checks.push_back(bool_check("two_nodal_T_nodes_transverse", both, "t1:4 t2:4", ranks, Provenance::Literature,
                                "nodes t1 and t2"));
  });

  checks.push_back(bool_check("construction_retries", true, "within " + std::to_string(retries), retry_log,
                              Provenance::Trivial, "invented"));
  return checks;
}

// ---------------------------------------------------------------------------

std::vector<Check> residuation_suite(std::uint64_t p, std::uint64_t seed, int retries, unsigned threads) {
  const PrimeField f(p);
  std::vector<Check> checks;
  std::string log;

  for (int attempt = 0; attempt <= retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::vector<Check> attempt_checks;
    try {
      const NodalDelPezzo w = construct_nodal_del_pezzo(f, s, retries);
      const ProjPointSet pts = sample_points(w.nodal, kSurfaceSample, s);
      const IdealPiece q2 = ideal_piece(f, pts, 2);
      const IdealPiece q3 = ideal_piece(f, pts, 3);
      const PlanePair planes = nodal_planes(w, s);
      const CubicChoice x = cubic_through(f, q3, planes, s, retries);

      const FpRows singular = singular_scan(f, x.cubic, threads);
      if (!singular.empty()) {
        log += "seed " + std::to_string(s) + ": X singular at " + to_string(singular.front()) + "; ";
        continue;
      }

      const std::vector<FpPoly> quadrics = q2.forms(f);
      CounterRng rng(s, "quadric-pencil");
      std::array<FpPoly, 2> pencil;
      do {
        for (auto& q : pencil) {
          FpVector c(quadrics.size());
          for (Fp& v : c) v = rng.element(f);
          q = linear_combination(f, quadrics, c);
        }
      } while (pencil[0].is_zero() || pencil[1].is_zero());

      const ResidualScan scan = residual_scan(f, pencil, x.cubic, q2, q3, s, threads);

      attempt_checks.push_back(bool_check("wprime_point_count", scan.wprime_points.size() >= kMinResidualPoints,
                                          ">= " + str(kMinResidualPoints), str(scan.wprime_points.size()),
                                          Provenance::Derived, "rational points of W'"));
      const bool w0_in = std::binary_search(scan.wprime_points.begin(), scan.wprime_points.end(), w.w0);
      attempt_checks.push_back(bool_check("w0_on_wprime", w0_in, "true", yes_no(w0_in), Provenance::Literature,
                                          "W' has a node at w0"));
      attempt_checks.push_back(compare_check("wprime_ideal_dims", "2:3 3:20",
                                             dims(scan.wprime_quadrics, scan.wprime_cubics), Provenance::Derived,
                                             "W' has Hilbert polynomial 3n^2 + 3n"));
      std::size_t covered = 0, w_off_wprime = 0;
      for (const auto& pt : scan.intersection) {
        const bool in_w = std::binary_search(scan.w_points.begin(), scan.w_points.end(), pt);
        const bool in_wp = std::binary_search(scan.wprime_points.begin(), scan.wprime_points.end(), pt);
        if (in_w || in_wp) ++covered;
        if (in_w && !in_wp) ++w_off_wprime;
      }
      const bool partition = covered == scan.intersection.size() && w_off_wprime > 0;
      attempt_checks.push_back(bool_check("residual_partition", partition, "W and W' cover Y cap X, W not in W'",
                                          "|Y cap X|=" + str(scan.intersection.size()) + " |W|=" +
                                              str(scan.w_points.size()) + " |W'|=" + str(scan.wprime_points.size()) +
                                              " covered=" + str(covered) + " W off W'=" + str(w_off_wprime),
                                          Provenance::Literature, "Y cap X = W u W'"));

      std::vector<FpPoly> generators = quadrics;
      for (auto& c : q3.forms(f)) generators.push_back(std::move(c));
      const FpRows w_singular = singular_points_on(f, generators, scan.w_points, 3);
      const bool only_node = w_singular.size() == 1 && w_singular.front() == w.w0;
      std::string found;
      for (const auto& pt : w_singular) found += (found.empty() ? "" : " ") + to_string(pt);
      attempt_checks.push_back(bool_check("W_singular_points", only_node, "w0 = " + to_string(w.w0),
                                          found.empty() ? "none" : found, Provenance::Literature,
                                          "only singularity is a node at w0"));
      attempt_checks.push_back(compare_check("X_singular_points", "0", "0", Provenance::Derived,
                                             "generic member smooth (rational points only)"));
      log += "seed " + std::to_string(s) + ": accepted";
      checks = std::move(attempt_checks);
      checks.push_back(bool_check("residuation_attempts", true, "<= " + std::to_string(retries) + " retries", log,
                                  Provenance::Trivial, "invented"));
      return checks;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::RetriesExhausted:
        case ErrorCode::RankNotStabilized:
        case ErrorCode::SpanNotPlane:
        case ErrorCode::ExhaustedDomain:
          log += "seed " + std::to_string(s) + ": " + e.what() + "; ";
          continue;
        default:
          throw;
      }
    }
  }
  checks.push_back(bool_check("residuation_attempts", false, "<= " + std::to_string(retries) + " retries", log,
                              Provenance::Trivial, "invented"));
  return checks;
}

// ---------------------------------------------------------------------------

std::uint64_t enumeration_prime_for(std::optional<std::uint64_t> prime) {
  return prime && *prime <= kMaxEnumerationPrime ? *prime : kDefaultEnumerationPrime;
}

void validate(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end())
    throw Error(ErrorCode::ConfigError, "unknown suite '" + config.suite + "'");
  if (config.retries < 0) throw Error(ErrorCode::ConfigError, "retries must be non-negative");
  if (config.prime) {
    const std::uint64_t p = *config.prime;
    if (!PrimeField::is_prime(p) || p <= 3 || p >= (1ULL << 31))
      throw Error(ErrorCode::ConfigError, std::to_string(p) + " is not a prime in (3, 2^31)");
    if ((config.suite == "geometry" || config.suite == "all") && p < kMinGeometryPrime)
      throw Error(ErrorCode::ConfigError, "geometry needs p >= " + std::to_string(kMinGeometryPrime));
  }
}

Certificate run_suite(const SuiteConfig& config) {
  validate(config);
  Certificate cert;
  cert.suite = config.suite;
  cert.tool_version = DISC24_VERSION;
  cert.threads = config.threads;
  const bool geometry = config.suite == "geometry" || config.suite == "all";
  cert.config = {{"suite", config.suite}, {"seed", config.seed}, {"retries", config.retries}};
  if (geometry) {
    cert.config["sampling_prime"] = config.prime.value_or(kDefaultSamplingPrime);
    cert.config["enumeration_prime"] = enumeration_prime_for(config.prime);
    cert.config["monomial_order"] = "graded lex, x0 > x1 > ... > xN";
  }

  auto run = [&](const std::string& area, const std::function<std::vector<Check>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    for (auto& c : body()) {
      c.name = area + "." + c.name;
      cert.checks.push_back(std::move(c));
    }
    cert.timings_ms[area] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  const bool all = config.suite == "all";
  if (all || config.suite == "lattice") run("lattice", [] { return lattice_suite(); });
  if (all || config.suite == "mukai") run("mukai", [&] { return mukai_suite(config.seed); });
  if (all || config.suite == "hilbert") run("hilbert", [] { return hilbert_suite(); });
  if (all || config.suite == "scroll") run("scroll", [] { return scroll_suite(); });
  if (geometry) {
    run("geometry", [&] {
      return geometry_sampling_suite(config.prime.value_or(kDefaultSamplingPrime), config.seed, config.retries);
    });
    run("residuation", [&] {
      return residuation_suite(enumeration_prime_for(config.prime), config.seed, config.retries, config.threads);
    });
  }
  return cert;
}

}  // namespace disc24
