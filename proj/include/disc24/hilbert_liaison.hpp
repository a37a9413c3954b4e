#pragma once

// Hilbert polynomials of complete intersections, residuation of Euler
// characteristics and the genus bookkeeping of curve liaison.

#include <string>
#include <vector>

#include "disc24/exact_linalg.hpp"

namespace disc24 {

/// Polynomial in n with rational coefficients, coefficient i of n^i.
/// Degree is capped at 5; trailing zeros are trimmed.
class HilbertPolynomial {
 public:
  static constexpr std::size_t kMaxDegree = 5;

  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rat> coefficients);
  /// Low-to-high integer coefficients: {7, -6, 6} is 6n^2 - 6n + 7.
  HilbertPolynomial(std::initializer_list<long> coefficients);

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat operator()(const Rat& n) const;
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  /// Integer values for every n in [lo, hi].
  bool integral_on(long lo, long hi) const;

  /// "6n^2 - 6n + 7"
  std::string to_string() const;

  friend HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b);
  friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b);
  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
};

/// Complete intersection of hypersurfaces of the given degrees in P^r.
struct CIProfile {
  long ambient_dim = 0;
  std::vector<long> degrees;

  /// Sum of degrees minus r + 1: the dualizing sheaf is O(k).
  long dualizing_twist() const;
  long dimension() const { return ambient_dim - static_cast<long>(degrees.size()); }
  long degree() const;
};

/// sum over subsets S of (-1)^|S| binom(n - sum S + r, r). Throws
/// TooManyHypersurfaces, InvalidArgument for empty/non-positive degrees.
HilbertPolynomial ci_hilbert_poly(const CIProfile& profile);

/// d n + 1 - p
HilbertPolynomial curve_hp(long degree, long arithmetic_genus);

/// total - kept + conductor
HilbertPolynomial residual_hp(const HilbertPolynomial& total, const HilbertPolynomial& kept,
                              const HilbertPolynomial& conductor);

/// 1 + (D^2 + D.K)/2. Throws ParityViolation.
long adjunction_genus(long d_sq, long d_dot_k);

/// Genus after k points of a curve are glued to one point.
long glue_points_genus(long genus, long points_glued);

struct LinkedCurve {
  long degree;
  long genus;
};

/// Residual curve in a curve complete intersection. Throws InvalidArgument
/// unless the profile cuts a curve, NonIntegralGenus.
LinkedCurve liaison_link(const CIProfile& profile, long degree, long genus);

/// 3n^2 + 3n + 1
HilbertPolynomial smooth_sextic_del_pezzo_hp();
/// Smooth value minus one for the node.
HilbertPolynomial nodal_sextic_del_pezzo_hp();

}  // namespace disc24
