#pragma once

// Surfaces over prime fields: parametrizations, projections, interpolated
// ideal pieces, node certificates and full point enumeration of P^N(F_p).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disc24/errors.hpp"

namespace disc24 {

using Fp = std::uint32_t;
using FpVector = std::vector<Fp>;
using FpRows = std::vector<FpVector>;

/// Z/p for a certified prime 3 < p < 2^31.
class PrimeField {
 public:
  /// Throws InvalidPrime.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t p() const { return p_; }

  Fp add(Fp a, Fp b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp mul(Fp a, Fp b) const { return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_); }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp pow(Fp a, std::uint64_t e) const;
  /// Throws InvalidArgument on zero.
  Fp inv(Fp a) const;
  Fp from_int(std::int64_t v) const;

  static bool is_prime(std::uint64_t n);

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Linear algebra over F_p

/// Reduced row echelon form in place (zero rows dropped); returns pivot columns.
std::vector<std::size_t> row_reduce(const PrimeField& f, FpRows& m);
std::size_t fp_rank(const PrimeField& f, FpRows m);
/// Basis of {v : m v = 0} for m with the given column count, one vector per
/// free column, with a 1 in that column.
FpRows nullspace(const PrimeField& f, FpRows m, std::size_t cols);

// ---------------------------------------------------------------------------
// Counter-based randomness

/// SplitMix64 over (seed, stream, counter). Streams keep independent draws
/// independent of call order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  CounterRng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next();
  Fp element(const PrimeField& f);
  Fp nonzero(const PrimeField& f);
  /// Uniform index in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t stream_id(std::string_view tag);

/// Fisher-Yates with CounterRng, identical on every platform.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, CounterRng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// ---------------------------------------------------------------------------
// Polynomials

using Exponent = std::vector<std::uint8_t>;

/// Sparse polynomial over F_p; terms sorted in graded lex order (x0 > x1 > ...).
struct FpPoly {
  std::size_t nvars = 0;
  std::vector<std::pair<Exponent, Fp>> terms;

  bool is_zero() const { return terms.empty(); }
};

/// Monomials of the given degree in graded lex order.
std::vector<Exponent> monomials(std::size_t nvars, unsigned degree);
std::size_t monomial_count(std::size_t nvars, unsigned degree);

FpPoly make_poly(const PrimeField& f, std::size_t nvars, std::vector<std::pair<Exponent, Fp>> terms);
Fp evaluate(const PrimeField& f, const FpPoly& poly, const FpVector& x);
FpPoly derivative(const PrimeField& f, const FpPoly& poly, std::size_t var);
FpPoly linear_combination(const PrimeField& f, const std::vector<FpPoly>& polys, const FpVector& coeffs);
/// Values of the given monomials at x.
FpVector monomial_values(const PrimeField& f, const std::vector<Exponent>& mons, const FpVector& x);
std::string to_string(const FpPoly& poly);

// ---------------------------------------------------------------------------
// Points and parametrizations

/// First nonzero coordinate scaled to 1. Throws InvalidArgument on zero.
FpVector normalize(const PrimeField& f, FpVector v);

struct ProjPointSet {
  std::uint32_t p = 0;
  std::size_t ambient_dim = 0;
  FpRows points;

  /// "p N" then one normalized point per line.
  std::string to_text() const;
};

enum class Domain { P2, P1xP1 };

struct Parametrization {
  PrimeField field;
  Domain domain;
  std::size_t target_dim;
  std::vector<FpPoly> forms;
  /// Domain points where one of these vanishes are never sampled.
  std::vector<FpPoly> excluded_locus;

  std::size_t domain_vars() const { return domain == Domain::P2 ? 3 : 4; }
  bool excluded(const FpVector& u) const;
  /// Normalized image, or nullopt if every form vanishes at u.
  std::optional<FpVector> image(const FpVector& u) const;
};

/// Cubics through the three coordinate points: P^2 --> P^6.
Parametrization parametrize_del_pezzo(const PrimeField& f);
/// Bidegree (1,3) on P^1 x P^1 --> P^7. Throws InvalidPrime for p < 11.
Parametrization parametrize_scroll(const PrimeField& f);

/// Random domain point: P^2 uniformly, P^1 x P^1 factorwise.
FpVector random_domain_point(const Parametrization& par, CounterRng& rng);

/// `count` distinct image points avoiding the excluded locus. Throws
/// ExhaustedDomain.
ProjPointSet sample_points(const Parametrization& par, std::size_t count, std::uint64_t seed);

/// Composes with a linear map whose kernel is the span of the centre
/// (one or two points). Throws CenterOnImage, InvalidArgument.
Parametrization linear_projection(const Parametrization& par, const FpRows& center);

// ---------------------------------------------------------------------------
// Ideal pieces

struct IdealPiece {
  unsigned degree = 0;
  std::size_t ambient_dim = 0;
  std::vector<Exponent> monomials;
  FpRows basis;

  std::size_t dim() const { return basis.size(); }
  std::vector<FpPoly> forms(const PrimeField& f) const;
  bool vanishes_at(const PrimeField& f, const FpVector& x) const;
};

/// Kernel of the evaluation matrix, recomputed on the first half of the
/// points. Throws InvalidArgument (too few points), InvalidPrime (p < 31),
/// RankNotStabilized.
IdealPiece ideal_piece(const PrimeField& f, const ProjPointSet& points, unsigned degree);

/// True iff every form vanishes at every point.
bool vanishes_on(const PrimeField& f, const IdealPiece& piece, const FpRows& points);

// ---------------------------------------------------------------------------
// Constructions

inline constexpr int kDefaultRetries = 5;

/// Projection of the sextic del Pezzo from a point x on the secant line of
/// w+ = phi(u+), w- = phi(u-).
struct NodalDelPezzo {
  Parametrization smooth;
  Parametrization nodal;
  FpVector u_plus;
  FpVector u_minus;
  FpVector center;
  FpVector w0;
  int retries = 0;
};

/// Throws RetriesExhausted.
NodalDelPezzo construct_nodal_del_pezzo(const PrimeField& f, std::uint64_t seed, int max_retries = kDefaultRetries);

/// Projection of the (1,3) scroll from the line through x_i on Sec(t_i+, t_i-).
struct TwoNodalScroll {
  Parametrization smooth;
  Parametrization nodal;
  std::array<std::array<FpVector, 2>, 2> preimages;
  FpRows center;
  std::array<FpVector, 2> nodes;
  int retries = 0;
};

TwoNodalScroll construct_two_nodal_scroll(const PrimeField& f, std::uint64_t seed,
                                          int max_retries = kDefaultRetries);

struct NodeCertificate {
  FpVector node;
  std::size_t branch_rank_plus = 0;
  std::size_t branch_rank_minus = 0;
  std::size_t combined_rank = 0;
  bool transverse = false;
};

/// Branch tangent planes at a double point, in an affine chart of the
/// target. Throws NotIdentified, NotTransverse.
NodeCertificate node_certificate(const Parametrization& par, const FpVector& u_plus, const FpVector& u_minus);

/// The two planes of the nodal del Pezzo: P spans the image N of the line
/// through u+, u-; P' spans the image N' of the conic through the three
/// coordinate points and u+, u-.
struct PlanePair {
  FpRows plane;        // 3 x 6, reduced echelon
  FpRows plane_prime;  // 3 x 6
  std::size_t nodal_cubic_dim = 0;        // cubics through N inside P
  std::size_t nodal_cubic_dim_prime = 0;  // same for N'
};

/// Throws SpanNotPlane.
PlanePair nodal_planes(const NodalDelPezzo& w, std::uint64_t seed);

/// Quadrics evaluated at `count` random points of the plane.
bool plane_contained(const PrimeField& f, const IdealPiece& quadrics, const FpRows& plane, CounterRng& rng,
                     std::size_t count);

struct PlaneContainment {
  PlanePair planes;
  std::size_t points_tested = 0;
};

/// Throws SpanNotPlane, ContainmentFails, InvalidArgument (no quadrics).
PlaneContainment plane_containment_check(const NodalDelPezzo& w, const IdealPiece& quadrics, std::uint64_t seed);

/// Plane spanned by w0 and two random points.
FpRows random_plane_through(const PrimeField& f, const FpVector& point, CounterRng& rng);

struct CubicChoice {
  FpPoly cubic;
  int retries = 0;
};

/// Random member of the cubic piece not vanishing on either plane. Throws
/// RetriesExhausted, InvalidArgument (empty piece).
CubicChoice cubic_through(const PrimeField& f, const IdealPiece& cubics, const PlanePair& planes, std::uint64_t seed,
                          int max_retries = kDefaultRetries);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::uint64_t kEnumerationLimit = 1'000'000'000;

/// (p^(N+1) - 1) / (p - 1)
std::uint64_t projective_point_count(std::uint32_t p, std::size_t ambient_dim);

/// All F_p-points of P^N where every form vanishes, sorted. Forms share
/// nvars = N + 1. Work is split into contiguous index ranges, one per
/// thread; the merge sorts, so the output is independent of `threads`.
/// Throws EnumerationTooLarge.
FpRows common_zeros(const PrimeField& f, const std::vector<FpPoly>& forms, unsigned threads);

struct ResidualScan {
  FpRows intersection;   // Y cap X
  FpRows w_points;       // in W by the W ideal
  FpRows other_points;   // intersection minus W
  IdealPiece wprime_quadrics;
  IdealPiece wprime_cubics;
  FpRows wprime_points;  // intersection points on which the W' ideal vanishes
};

/// Enumerates Y cap X for Y = {q1 = q2 = 0}, splits it by the W ideal and
/// interpolates W' from the rest. Throws EnumerationTooLarge and the
/// ideal_piece errors.
ResidualScan residual_scan(const PrimeField& f, const std::array<FpPoly, 2>& pencil, const FpPoly& cubic,
                           const IdealPiece& w_quadrics, const IdealPiece& w_cubics, std::uint64_t seed,
                           unsigned threads);

/// Rational points of {X = 0} where every partial derivative vanishes.
FpRows singular_scan(const PrimeField& f, const FpPoly& hypersurface, unsigned threads);

/// Points of the supplied set where the Jacobian of `generators` has rank
/// below `codim`.
FpRows singular_points_on(const PrimeField& f, const std::vector<FpPoly>& generators, const FpRows& points,
                          std::size_t codim);

std::string to_string(const FpVector& point);

}  // namespace disc24
