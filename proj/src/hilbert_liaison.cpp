#include "disc24/hilbert_liaison.hpp"

#include <numeric>
#include <sstream>

namespace disc24 {

namespace {

std::vector<Rat> trimmed(std::vector<Rat> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// binom(n + c, r) as a polynomial in n.
std::vector<Rat> binomial_poly(long c, long r) {
  std::vector<Rat> poly{Rat(1)};
  Int factorial = 1;
  for (long i = 0; i < r; ++i) {
    std::vector<Rat> next(poly.size() + 1);
    const Rat shift(c - i);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * shift;
    }
    poly = std::move(next);
    factorial *= i + 1;
  }
  for (Rat& x : poly) x /= Rat(factorial);
  return poly;
}

}  // namespace

HilbertPolynomial::HilbertPolynomial(std::vector<Rat> coefficients) : coeffs_(trimmed(std::move(coefficients))) {
  for (Rat& c : coeffs_) c.canonicalize();
  if (coeffs_.size() > kMaxDegree + 1)
    throw Error(ErrorCode::InvalidArgument, "Hilbert polynomials are limited to degree 5");
}

HilbertPolynomial::HilbertPolynomial(std::initializer_list<long> coefficients)
    : HilbertPolynomial(std::vector<Rat>(coefficients.begin(), coefficients.end())) {}

Rat HilbertPolynomial::operator()(const Rat& n) const {
  Rat v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + *it;
  return v;
}

bool HilbertPolynomial::integral_on(long lo, long hi) const {
  for (long n = lo; n <= hi; ++n)
    if ((*this)(Rat(n)).get_den() != 1) return false;
  return true;
}

std::string HilbertPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "n";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return HilbertPolynomial(std::move(c));
}

HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return HilbertPolynomial(std::move(c));
}

long CIProfile::dualizing_twist() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0L) - ambient_dim - 1;
}

long CIProfile::degree() const {
  return std::accumulate(degrees.begin(), degrees.end(), 1L, std::multiplies<>());
}

HilbertPolynomial ci_hilbert_poly(const CIProfile& profile) {
  const long r = profile.ambient_dim;
  const std::size_t k = profile.degrees.size();
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "at least one hypersurface is required");
  if (static_cast<long>(k) > r)
    throw Error(ErrorCode::TooManyHypersurfaces,
                std::to_string(k) + " hypersurfaces in P^" + std::to_string(r));
  for (long d : profile.degrees)
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
  if (k > 20) throw Error(ErrorCode::InvalidArgument, "too many degrees");

  std::vector<Rat> total(r + 1);
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    long shift = 0;
    int parity = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) {
        shift += profile.degrees[i];
        parity = -parity;
      }
    const std::vector<Rat> b = binomial_poly(r - shift, r);
    for (std::size_t i = 0; i < b.size(); ++i) total[i] += parity * b[i];
  }
  return HilbertPolynomial(std::move(total));
}

HilbertPolynomial curve_hp(long degree, long arithmetic_genus) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "curve degree must be positive");
  return HilbertPolynomial{1 - arithmetic_genus, degree};
}

HilbertPolynomial residual_hp(const HilbertPolynomial& total, const HilbertPolynomial& kept,
                              const HilbertPolynomial& conductor) {
  return total - kept + conductor;
}

long adjunction_genus(long d_sq, long d_dot_k) {
  const long s = d_sq + d_dot_k;
  if (s % 2 != 0)
    throw Error(ErrorCode::ParityViolation,
                "D^2 + D.K = " + std::to_string(s) + " is odd");
  return 1 + s / 2;
}

long glue_points_genus(long genus, long points_glued) {
  if (points_glued < 1) throw Error(ErrorCode::InvalidArgument, "at least one point is glued");
  return genus + points_glued - 1;
}

LinkedCurve liaison_link(const CIProfile& profile, long degree, long genus) {
  if (profile.dimension() != 1)
    throw Error(ErrorCode::InvalidArgument, "liaison needs a curve complete intersection");
  for (long d : profile.degrees)
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
  const long linked_degree = profile.degree() - degree;
  const long twice = profile.dualizing_twist() * (degree - linked_degree);
  if (twice % 2 != 0)
    throw Error(ErrorCode::NonIntegralGenus,
                "genus difference " + std::to_string(twice) + "/2 is not an integer");
  return LinkedCurve{linked_degree, genus - twice / 2};
}

HilbertPolynomial smooth_sextic_del_pezzo_hp() { return HilbertPolynomial{1, 3, 3}; }

HilbertPolynomial nodal_sextic_del_pezzo_hp() { return smooth_sextic_del_pezzo_hp() - HilbertPolynomial{1}; }

}  // namespace disc24
