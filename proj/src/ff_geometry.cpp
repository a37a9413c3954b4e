#include "disc24/ff_geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace disc24 {

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p <= 3 || p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidPrime, std::to_string(p) + " is not a prime in (3, 2^31)");
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Fp PrimeField::inv(Fp a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

Fp PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Fp>(r);
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<std::size_t> row_reduce(const PrimeField& f, FpRows& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Fp inv = f.inv(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = f.mul(m[r][k], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Fp factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t fp_rank(const PrimeField& f, FpRows m) { return row_reduce(f, m).size(); }

FpRows nullspace(const PrimeField& f, FpRows m, std::size_t cols) {
  const std::vector<std::size_t> pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  FpRows basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Randomness

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t stream_id(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream))) {}

CounterRng::CounterRng(std::uint64_t seed, std::string_view stream) : CounterRng(seed, stream_id(stream)) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ + kGolden * counter_++); }

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

Fp CounterRng::element(const PrimeField& f) { return static_cast<Fp>(below(f.p())); }

Fp CounterRng::nonzero(const PrimeField& f) { return static_cast<Fp>(1 + below(f.p() - 1)); }

// ---------------------------------------------------------------------------
// Polynomials

std::vector<Exponent> monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) return out;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      e[var] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = static_cast<std::uint8_t>(k);
      fill(var + 1, left - k);
    }
  };
  fill(0, degree);
  return out;
}

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  // binom(degree + nvars - 1, nvars - 1)
  std::size_t c = 1;
  for (std::size_t i = 1; i < nvars; ++i) c = c * (degree + i) / i;
  return c;
}

namespace {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool graded_lex_greater(const Exponent& a, const Exponent& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Fp monomial_value(const PrimeField& f, const Exponent& e, const FpVector& x) {
  Fp v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) v = f.mul(v, x[i]);
  return v;
}

}  // namespace

FpPoly make_poly(const PrimeField& f, std::size_t nvars, std::vector<std::pair<Exponent, Fp>> terms) {
  std::map<Exponent, Fp> merged;
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from nvars");
    Fp& slot = merged[e];
    slot = f.add(slot, c % f.p());
  }
  FpPoly poly{nvars, {}};
  for (auto& [e, c] : merged)
    if (c != 0) poly.terms.emplace_back(e, c);
  std::sort(poly.terms.begin(), poly.terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
  return poly;
}

Fp evaluate(const PrimeField& f, const FpPoly& poly, const FpVector& x) {
  if (x.size() != poly.nvars) throw Error(ErrorCode::DimensionMismatch, "point length differs from nvars");
  Fp total = 0;
  for (const auto& [e, c] : poly.terms) total = f.add(total, f.mul(c, monomial_value(f, e, x)));
  return total;
}

FpPoly derivative(const PrimeField& f, const FpPoly& poly, std::size_t var) {
  std::vector<std::pair<Exponent, Fp>> terms;
  for (const auto& [e, c] : poly.terms) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    terms.emplace_back(std::move(d), f.mul(c, f.from_int(e[var])));
  }
  return make_poly(f, poly.nvars, std::move(terms));
}

FpPoly linear_combination(const PrimeField& f, const std::vector<FpPoly>& polys, const FpVector& coeffs) {
  if (polys.size() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count");
  if (polys.empty()) return FpPoly{};
  std::vector<std::pair<Exponent, Fp>> terms;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (const auto& [e, c] : polys[i].terms) terms.emplace_back(e, f.mul(c, coeffs[i]));
  }
  return make_poly(f, polys[0].nvars, std::move(terms));
}

FpVector monomial_values(const PrimeField& f, const std::vector<Exponent>& mons, const FpVector& x) {
  FpVector out;
  out.reserve(mons.size());
  for (const auto& e : mons) out.push_back(monomial_value(f, e, x));
  return out;
}

std::string to_string(const FpPoly& poly) {
  if (poly.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly.terms) {
    if (!first) os << " + ";
    first = false;
    bool bare = true;
    if (c != 1 || total_degree(e) == 0) {
      os << c;
      bare = false;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!bare) os << "*";
      bare = false;
      os << "x" << i;
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
  }
  return os.str();
}

std::string to_string(const FpVector& point) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Points and parametrizations

FpVector normalize(const PrimeField& f, FpVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](Fp x) { return x != 0; });
  if (it == v.end()) throw Error(ErrorCode::InvalidArgument, "zero vector is not a projective point");
  const Fp inv = f.inv(*it);
  for (Fp& x : v) x = f.mul(x, inv);
  return v;
}

std::string ProjPointSet::to_text() const {
  std::ostringstream os;
  os << p << " " << ambient_dim << "\n";
  for (const auto& pt : points) {
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? " " : "") << pt[i];
    os << "\n";
  }
  return os.str();
}

bool Parametrization::excluded(const FpVector& u) const {
  for (const auto& g : excluded_locus)
    if (evaluate(field, g, u) == 0) return true;
  return false;
}

std::optional<FpVector> Parametrization::image(const FpVector& u) const {
  FpVector v;
  v.reserve(forms.size());
  bool nonzero = false;
  for (const auto& g : forms) {
    v.push_back(evaluate(field, g, u));
    nonzero = nonzero || v.back() != 0;
  }
  if (!nonzero) return std::nullopt;
  return normalize(field, std::move(v));
}

Parametrization parametrize_del_pezzo(const PrimeField& f) {
  std::vector<FpPoly> forms;
  for (const Exponent& e : monomials(3, 3)) {
    if (std::count(e.begin(), e.end(), 3)) continue;
    forms.push_back(make_poly(f, 3, {{e, 1}}));
  }
  const FpPoly xyz = make_poly(f, 3, {{Exponent{1, 1, 1}, 1}});
  return Parametrization{f, Domain::P2, forms.size() - 1, std::move(forms), {xyz}};
}

Parametrization parametrize_scroll(const PrimeField& f) {
  if (f.p() < 11) throw Error(ErrorCode::InvalidPrime, "the scroll needs p >= 11");
  std::vector<FpPoly> forms;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j <= 3; ++j) {
      Exponent e{static_cast<std::uint8_t>(i == 0), static_cast<std::uint8_t>(i == 1),
                 static_cast<std::uint8_t>(3 - j), static_cast<std::uint8_t>(j)};
      forms.push_back(make_poly(f, 4, {{e, 1}}));
    }
  return Parametrization{f, Domain::P1xP1, 7, std::move(forms), {}};
}

namespace {

FpVector random_projective(const PrimeField& f, CounterRng& rng, std::size_t n) {
  while (true) {
    FpVector v(n);
    for (Fp& x : v) x = rng.element(f);
    if (std::any_of(v.begin(), v.end(), [](Fp x) { return x != 0; })) return normalize(f, std::move(v));
  }
}

FpVector add_scaled(const PrimeField& f, const FpVector& a, Fp s, const FpVector& b) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], f.mul(s, b[i]));
  return out;
}

// Draws images of domain points from `draw` until `count` are distinct.
ProjPointSet collect_images(const Parametrization& par, std::size_t count, const std::function<FpVector()>& draw) {
  ProjPointSet out{par.field.p(), par.target_dim, {}};
  std::set<FpVector> seen;
  const std::size_t max_attempts = std::max<std::size_t>(2000, 200 * count);
  for (std::size_t attempt = 0; out.points.size() < count; ++attempt) {
    if (attempt >= max_attempts)
      throw Error(ErrorCode::ExhaustedDomain, "found only " + std::to_string(out.points.size()) + " of " +
                                                  std::to_string(count) + " distinct points");
    const FpVector u = draw();
    if (par.excluded(u)) continue;
    auto img = par.image(u);
    if (!img) continue;
    if (seen.insert(*img).second) out.points.push_back(std::move(*img));
  }
  return out;
}

}  // namespace

FpVector random_domain_point(const Parametrization& par, CounterRng& rng) {
  if (par.domain == Domain::P2) return random_projective(par.field, rng, 3);
  FpVector s = random_projective(par.field, rng, 2);
  FpVector t = random_projective(par.field, rng, 2);
  return {s[0], s[1], t[0], t[1]};
}

ProjPointSet sample_points(const Parametrization& par, std::size_t count, std::uint64_t seed) {
  CounterRng rng(seed, "sample-points");
  return collect_images(par, count, [&] { return random_domain_point(par, rng); });
}

// ---------------------------------------------------------------------------
// Ideal pieces

namespace {

FpRows interpolate(const PrimeField& f, const FpRows& points, const std::vector<Exponent>& mons) {
  FpRows eval;
  eval.reserve(points.size());
  for (const auto& pt : points) eval.push_back(monomial_values(f, mons, pt));
  return nullspace(f, std::move(eval), mons.size());
}

}  // namespace

std::vector<FpPoly> IdealPiece::forms(const PrimeField& f) const {
  std::vector<FpPoly> out;
  for (const auto& row : basis) {
    std::vector<std::pair<Exponent, Fp>> terms;
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (row[i] != 0) terms.emplace_back(monomials[i], row[i]);
    out.push_back(make_poly(f, ambient_dim + 1, std::move(terms)));
  }
  return out;
}

bool IdealPiece::vanishes_at(const PrimeField& f, const FpVector& x) const {
  if (basis.empty()) return true;
  const FpVector values = monomial_values(f, monomials, x);
  for (const auto& row : basis) {
    Fp total = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) total = f.add(total, f.mul(row[i], values[i]));
    if (total != 0) return false;
  }
  return true;
}

IdealPiece ideal_piece(const PrimeField& f, const ProjPointSet& points, unsigned degree) {
  if (f.p() < 31) throw Error(ErrorCode::InvalidPrime, "interpolation needs p >= 31");
  const std::size_t nvars = points.ambient_dim + 1;
  for (const auto& pt : points.points)
    if (pt.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "point length differs from N + 1");
  IdealPiece piece{degree, points.ambient_dim, monomials(nvars, degree), {}};
  if (points.points.size() < 2 * piece.monomials.size())
    throw Error(ErrorCode::InvalidArgument, std::to_string(points.points.size()) + " points for " +
                                                std::to_string(piece.monomials.size()) + " monomials");
  piece.basis = interpolate(f, points.points, piece.monomials);
  const FpRows half(points.points.begin(), points.points.begin() + points.points.size() / 2);
  const std::size_t half_dim = interpolate(f, half, piece.monomials).size();
  if (half_dim != piece.dim())
    throw Error(ErrorCode::RankNotStabilized, "degree " + std::to_string(degree) + ": " + std::to_string(half_dim) +
                                                  " forms on half the points, " + std::to_string(piece.dim()) +
                                                  " on all");
  return piece;
}

bool vanishes_on(const PrimeField& f, const IdealPiece& piece, const FpRows& points) {
  for (const auto& pt : points)
    if (!piece.vanishes_at(f, pt)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Projection

Parametrization linear_projection(const Parametrization& par, const FpRows& center) {
  const PrimeField& f = par.field;
  const std::size_t n = par.target_dim + 1;
  if (center.empty() || center.size() > 2) throw Error(ErrorCode::InvalidArgument, "centre must have 1 or 2 points");
  for (const auto& c : center)
    if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "centre point length");
  if (fp_rank(f, center) != center.size()) throw Error(ErrorCode::InvalidArgument, "centre points are dependent");

  // The image is cut out by its quadrics and cubics; a centre point on
  // which all of them vanish lies on the image.
  const std::size_t needed = 2 * monomial_count(n, 3) + 16;
  const ProjPointSet sample = sample_points(par, needed, stream_id("projection-guard"));
  const FpRows quadrics = interpolate(f, sample.points, monomials(n, 2));
  const FpRows cubics = interpolate(f, sample.points, monomials(n, 3));
  const IdealPiece q2{2, par.target_dim, monomials(n, 2), quadrics};
  const IdealPiece q3{3, par.target_dim, monomials(n, 3), cubics};
  for (const auto& c : center)
    if (q2.vanishes_at(f, c) && q3.vanishes_at(f, c))
      throw Error(ErrorCode::CenterOnImage, "centre point " + to_string(c) + " lies on the image");

  const FpRows map = nullspace(f, center, n);
  std::vector<FpPoly> forms;
  for (const auto& row : map) forms.push_back(linear_combination(f, par.forms, row));
  return Parametrization{f, par.domain, map.size() - 1, std::move(forms), par.excluded_locus};
}

// ---------------------------------------------------------------------------
// Constructions

NodalDelPezzo construct_nodal_del_pezzo(const PrimeField& f, std::uint64_t seed, int max_retries) {
  const Parametrization smooth = parametrize_del_pezzo(f);
  std::string last_error = "genericity";
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    CounterRng rng(seed, stream_id("nodal-del-pezzo") + static_cast<std::uint64_t>(attempt));
    const Fp a = rng.nonzero(f), b = rng.nonzero(f), c = rng.nonzero(f), d = rng.nonzero(f);
    // coordinate ratios y/x, z/x, z/y must differ between u+ and u-
    if (a == c || b == d || f.mul(b, c) == f.mul(a, d)) continue;
    const FpVector u_plus{1, a, b};
    const FpVector u_minus{1, c, d};
    const FpVector w_plus = *smooth.image(u_plus);
    const FpVector w_minus = *smooth.image(u_minus);
    const FpVector center = normalize(f, add_scaled(f, w_plus, rng.nonzero(f), w_minus));
    try {
      Parametrization nodal = linear_projection(smooth, {center});
      auto w0 = nodal.image(u_plus);
      if (!w0 || w0 != nodal.image(u_minus)) continue;
      return NodalDelPezzo{smooth, std::move(nodal), u_plus, u_minus, center, *w0, attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CenterOnImage) throw;
      last_error = e.what();
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "nodal del Pezzo: " + last_error);
}

TwoNodalScroll construct_two_nodal_scroll(const PrimeField& f, std::uint64_t seed, int max_retries) {
  const Parametrization smooth = parametrize_scroll(f);
  std::string last_error = "genericity";
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    CounterRng rng(seed, stream_id("two-nodal-scroll") + static_cast<std::uint64_t>(attempt));
    std::array<std::array<FpVector, 2>, 2> pre;
    std::set<FpVector> images;
    for (auto& pair : pre)
      for (auto& u : pair) {
        u = random_domain_point(smooth, rng);
        images.insert(*smooth.image(u));
      }
    if (images.size() != 4) continue;
    FpRows center;
    for (const auto& pair : pre)
      center.push_back(
          normalize(f, add_scaled(f, *smooth.image(pair[0]), rng.nonzero(f), *smooth.image(pair[1]))));
    if (fp_rank(f, center) != 2) continue;
    try {
      Parametrization nodal = linear_projection(smooth, center);
      std::array<FpVector, 2> nodes;
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i) {
        auto a = nodal.image(pre[i][0]);
        auto b = nodal.image(pre[i][1]);
        ok = a && a == b;
        if (ok) nodes[i] = *a;
      }
      if (!ok || nodes[0] == nodes[1]) continue;
      return TwoNodalScroll{smooth, std::move(nodal), pre, center, nodes, attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CenterOnImage) throw;
      last_error = e.what();
    }
  }
  throw Error(ErrorCode::RetriesExhausted, "two-nodal scroll: " + last_error);
}

// ---------------------------------------------------------------------------
// Node certificates

namespace {

std::vector<std::size_t> free_domain_vars(const Parametrization& par, const FpVector& u) {
  std::vector<std::vector<std::size_t>> blocks =
      par.domain == Domain::P2 ? std::vector<std::vector<std::size_t>>{{0, 1, 2}}
                               : std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}};
  std::vector<std::size_t> out;
  for (const auto& block : blocks) {
    std::size_t fixed = block.size();
    for (std::size_t i = 0; i < block.size(); ++i)
      if (u[block[i]] != 0) {
        fixed = i;
        break;
      }
    for (std::size_t i = 0; i < block.size(); ++i)
      if (i != fixed) out.push_back(block[i]);
  }
  return out;
}

// Tangent vectors of the branch through u, in the chart {y_k != 0}.
FpRows branch_tangents(const Parametrization& par, const FpVector& u, std::size_t k) {
  const PrimeField& f = par.field;
  FpVector phi;
  for (const auto& g : par.forms) phi.push_back(evaluate(f, g, u));
  FpRows out;
  for (std::size_t v : free_domain_vars(par, u)) {
    FpVector dphi;
    for (const auto& g : par.forms) dphi.push_back(evaluate(f, derivative(f, g, v), u));
    FpVector t;
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (j != k) t.push_back(f.sub(f.mul(dphi[j], phi[k]), f.mul(phi[j], dphi[k])));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

NodeCertificate node_certificate(const Parametrization& par, const FpVector& u_plus, const FpVector& u_minus) {
  auto a = par.image(u_plus);
  auto b = par.image(u_minus);
  if (!a || !b || *a != *b)
    throw Error(ErrorCode::NotIdentified, "preimages map to " + (a ? to_string(*a) : "nothing") + " and " +
                                              (b ? to_string(*b) : "nothing"));
  const std::size_t k = static_cast<std::size_t>(std::find(a->begin(), a->end(), Fp(1)) - a->begin());
  const FpRows tp = branch_tangents(par, u_plus, k);
  const FpRows tm = branch_tangents(par, u_minus, k);
  FpRows both = tp;
  both.insert(both.end(), tm.begin(), tm.end());
  NodeCertificate cert{*a, fp_rank(par.field, tp), fp_rank(par.field, tm), fp_rank(par.field, both), false};
  if (cert.branch_rank_plus != 2 || cert.branch_rank_minus != 2 || cert.combined_rank != 4)
    throw Error(ErrorCode::NotTransverse, "branch ranks " + std::to_string(cert.branch_rank_plus) + ", " +
                                              std::to_string(cert.branch_rank_minus) + ", combined " +
                                              std::to_string(cert.combined_rank));
  cert.transverse = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Planes

namespace {

FpRows plane_span(const PrimeField& f, const FpRows& points, const char* which) {
  FpRows m = points;
  row_reduce(f, m);
  if (m.size() != 3)
    throw Error(ErrorCode::SpanNotPlane, std::string(which) + " spans a space of dimension " +
                                             std::to_string(static_cast<long>(m.size()) - 1));
  return m;
}

// Cubics through the curve inside its plane, in plane coordinates.
std::size_t plane_cubic_dim(const PrimeField& f, const FpRows& plane, const FpRows& points) {
  FpRows reduced = plane;
  const std::vector<std::size_t> pivots = row_reduce(f, reduced);
  ProjPointSet coords{f.p(), 2, {}};
  for (const auto& pt : points) {
    FpVector c;
    for (std::size_t col : pivots) c.push_back(pt[col]);
    coords.points.push_back(normalize(f, std::move(c)));
  }
  return ideal_piece(f, coords, 3).dim();
}

constexpr std::size_t kCurvePoints = 24;

}  // namespace

PlanePair nodal_planes(const NodalDelPezzo& w, std::uint64_t seed) {
  const PrimeField& f = w.nodal.field;
  CounterRng rng(seed, "nodal-planes");

  // N: image of the line through u+ and u-
  const ProjPointSet n_points = collect_images(w.nodal, kCurvePoints, [&] {
    return normalize(f, add_scaled(f, w.u_plus, rng.element(f), w.u_minus));
  });

  // N': the conic a yz + b xz + c xy = 0 through u+, u- is the Cremona
  // image of the line aX + bY + cZ = 0.
  FpRows conditions;
  for (const FpVector* u : {&w.u_plus, &w.u_minus}) {
    const FpVector& x = *u;
    conditions.push_back({f.mul(x[1], x[2]), f.mul(x[0], x[2]), f.mul(x[0], x[1])});
  }
  const FpRows conic = nullspace(f, conditions, 3);
  if (conic.size() != 1) throw Error(ErrorCode::SpanNotPlane, "conic through the five points is not unique");
  const FpRows line = nullspace(f, conic, 3);
  const ProjPointSet n_prime_points = collect_images(w.nodal, kCurvePoints, [&] {
    FpVector l = add_scaled(f, line[0], rng.element(f), line[1]);
    return normalize(f, FpVector{f.mul(l[1], l[2]), f.mul(l[0], l[2]), f.mul(l[0], l[1])});
  });

  PlanePair out;
  out.plane = plane_span(f, n_points.points, "N");
  out.plane_prime = plane_span(f, n_prime_points.points, "N'");
  out.nodal_cubic_dim = plane_cubic_dim(f, out.plane, n_points.points);
  out.nodal_cubic_dim_prime = plane_cubic_dim(f, out.plane_prime, n_prime_points.points);
  return out;
}

namespace {

FpVector random_plane_point(const PrimeField& f, const FpRows& plane, CounterRng& rng) {
  while (true) {
    FpVector v(plane[0].size(), 0);
    for (const auto& row : plane) v = add_scaled(f, v, rng.element(f), row);
    if (std::any_of(v.begin(), v.end(), [](Fp x) { return x != 0; })) return normalize(f, std::move(v));
  }
}

constexpr std::size_t kPlaneTestPoints = 16;

}  // namespace

bool plane_contained(const PrimeField& f, const IdealPiece& quadrics, const FpRows& plane, CounterRng& rng,
                     std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (!quadrics.vanishes_at(f, random_plane_point(f, plane, rng))) return false;
  return true;
}

PlaneContainment plane_containment_check(const NodalDelPezzo& w, const IdealPiece& quadrics, std::uint64_t seed) {
  if (quadrics.dim() == 0) throw Error(ErrorCode::InvalidArgument, "no quadrics to test");
  const PrimeField& f = w.nodal.field;
  PlaneContainment out{nodal_planes(w, seed), 0};
  CounterRng rng(seed, "plane-containment");
  if (!plane_contained(f, quadrics, out.planes.plane, rng, kPlaneTestPoints))
    throw Error(ErrorCode::ContainmentFails, "plane P is not in every quadric");
  if (!plane_contained(f, quadrics, out.planes.plane_prime, rng, kPlaneTestPoints))
    throw Error(ErrorCode::ContainmentFails, "plane P' is not in every quadric");
  out.points_tested = 2 * kPlaneTestPoints;
  return out;
}

FpRows random_plane_through(const PrimeField& f, const FpVector& point, CounterRng& rng) {
  while (true) {
    FpRows rows{point, random_projective(f, rng, point.size()), random_projective(f, rng, point.size())};
    row_reduce(f, rows);
    if (rows.size() == 3) return rows;
  }
}

CubicChoice cubic_through(const PrimeField& f, const IdealPiece& cubics, const PlanePair& planes,
                          std::uint64_t seed, int max_retries) {
  if (cubics.dim() == 0) throw Error(ErrorCode::InvalidArgument, "cubic piece is empty");
  const std::vector<FpPoly> basis = cubics.forms(f);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    CounterRng rng(seed, stream_id("cubic-through") + static_cast<std::uint64_t>(attempt));
    FpVector coeffs(basis.size());
    for (Fp& c : coeffs) c = rng.element(f);
    FpPoly x = linear_combination(f, basis, coeffs);
    if (x.is_zero()) continue;
    auto nonzero_on = [&](const FpRows& plane) {
      for (std::size_t i = 0; i < 10; ++i)
        if (evaluate(f, x, random_plane_point(f, plane, rng)) != 0) return true;
      return false;
    };
    if (nonzero_on(planes.plane) && nonzero_on(planes.plane_prime)) return CubicChoice{std::move(x), attempt};
  }
  throw Error(ErrorCode::RetriesExhausted, "every sampled cubic vanished on a plane");
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t projective_point_count(std::uint32_t p, std::size_t ambient_dim) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i <= ambient_dim; ++i) {
    total += power;
    if (total > kEnumerationLimit) return kEnumerationLimit + 1;
    power *= p;
    if (power > kEnumerationLimit) power = kEnumerationLimit + 1;
  }
  return total;
}

namespace {

struct PrefixTerm {
  Exponent prefix;  // exponents of x_0 .. x_{N-1}
  unsigned last;    // exponent of x_N
  Fp coeff;
};

// Prefix index -> (x_0, ..., x_{N-1}) with the leading coordinate 1 and
// lexicographic order matching the index.
class PrefixSpace {
 public:
  PrefixSpace(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
    // block i: x_i = 1, x_{i+1..N-1} free
    std::uint64_t size = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) size *= p;
    for (std::size_t i = 0; i < n; ++i) {
      sizes_.push_back(size);
      size /= (i + 1 < n) ? p : 1;
    }
    total_ = 0;
    for (auto s : sizes_) total_ += s;
  }

  std::uint64_t total() const { return total_; }

  // Blocks ordered so that prefixes with more leading zeros come first.
  void decode(std::uint64_t index, FpVector& out) const {
    std::size_t lead = n_;
    for (std::size_t i = n_; i-- > 0;) {
      if (index < sizes_[i]) {
        lead = i;
        break;
      }
      index -= sizes_[i];
    }
    std::fill(out.begin(), out.end(), 0);
    out[lead] = 1;
    for (std::size_t k = n_; k-- > lead + 1;) {
      out[k] = static_cast<Fp>(index % p_);
      index /= p_;
    }
  }

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint64_t> sizes_;
  std::uint64_t total_;
};

}  // namespace

FpRows common_zeros(const PrimeField& f, const std::vector<FpPoly>& forms, unsigned threads) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "no forms");
  const std::size_t nvars = forms[0].nvars;
  if (nvars < 2) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  for (const auto& g : forms)
    if (g.nvars != nvars) throw Error(ErrorCode::DimensionMismatch, "forms have different variable counts");
  const std::uint64_t count = projective_point_count(f.p(), nvars - 1);
  if (count > kEnumerationLimit)
    throw Error(ErrorCode::EnumerationTooLarge,
                "P^" + std::to_string(nvars - 1) + "(F_" + std::to_string(f.p()) + ") exceeds 10^9 points");

  const std::size_t n = nvars - 1;
  unsigned max_exp = 0;
  std::vector<PrefixTerm> first;
  for (const auto& [e, c] : forms[0].terms) {
    first.push_back({Exponent(e.begin(), e.begin() + n), e[n], c});
    max_exp = std::max<unsigned>(max_exp, *std::max_element(e.begin(), e.end()));
  }
  unsigned last_degree = 0;
  for (const auto& t : first) last_degree = std::max(last_degree, t.last);

  const PrefixSpace space(f.p(), n);
  auto check_rest = [&](const FpVector& x) {
    for (std::size_t i = 1; i < forms.size(); ++i)
      if (evaluate(f, forms[i], x) != 0) return false;
    return true;
  };

  auto work = [&](std::uint64_t begin, std::uint64_t end, FpRows& hits) {
    FpVector prefix(n);
    FpVector point(nvars);
    std::vector<FpVector> powers(n, FpVector(max_exp + 1, 1));
    FpVector coeff(last_degree + 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      space.decode(idx, prefix);
      for (std::size_t j = 0; j < n; ++j)
        for (unsigned e = 1; e <= max_exp; ++e) powers[j][e] = f.mul(powers[j][e - 1], prefix[j]);
      std::fill(coeff.begin(), coeff.end(), 0);
      for (const auto& t : first) {
        Fp v = t.coeff;
        for (std::size_t j = 0; j < n; ++j)
          if (t.prefix[j]) v = f.mul(v, powers[j][t.prefix[j]]);
        coeff[t.last] = f.add(coeff[t.last], v);
      }
      std::copy(prefix.begin(), prefix.end(), point.begin());
      for (Fp xn = 0; xn < f.p(); ++xn) {
        Fp v = 0;
        for (std::size_t k = coeff.size(); k-- > 0;) v = f.add(f.mul(v, xn), coeff[k]);
        if (v != 0) continue;
        point[n] = xn;
        if (check_rest(point)) hits.push_back(point);
      }
    }
  };

  const std::uint64_t total = space.total();
  unsigned t = std::max(1u, threads);
  if (t > total) t = static_cast<unsigned>(total);
  std::vector<FpRows> parts(t);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < t; ++i) {
    const std::uint64_t begin = total * i / t;
    const std::uint64_t end = total * (i + 1) / t;
    if (i + 1 == t)
      work(begin, end, parts[i]);
    else
      pool.emplace_back(work, begin, end, std::ref(parts[i]));
  }
  for (auto& th : pool) th.join();

  FpRows out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  FpVector apex(nvars, 0);
  apex[n] = 1;
  if (evaluate(f, forms[0], apex) == 0 && check_rest(apex)) out.push_back(apex);
  std::sort(out.begin(), out.end());
  return out;
}

ResidualScan residual_scan(const PrimeField& f, const std::array<FpPoly, 2>& pencil, const FpPoly& cubic,
                           const IdealPiece& w_quadrics, const IdealPiece& w_cubics, std::uint64_t seed,
                           unsigned threads) {
  ResidualScan out;
  out.intersection = common_zeros(f, {pencil[0], pencil[1], cubic}, threads);
  for (const auto& pt : out.intersection) {
    if (w_quadrics.vanishes_at(f, pt) && w_cubics.vanishes_at(f, pt))
      out.w_points.push_back(pt);
    else
      out.other_points.push_back(pt);
  }
  ProjPointSet residual{f.p(), w_quadrics.ambient_dim, out.other_points};
  CounterRng rng(seed, "residual-shuffle");
  deterministic_shuffle(residual.points, rng);
  out.wprime_quadrics = ideal_piece(f, residual, 2);
  out.wprime_cubics = ideal_piece(f, residual, 3);
  for (const auto& pt : out.intersection)
    if (out.wprime_quadrics.vanishes_at(f, pt) && out.wprime_cubics.vanishes_at(f, pt))
      out.wprime_points.push_back(pt);
  return out;
}

FpRows singular_scan(const PrimeField& f, const FpPoly& hypersurface, unsigned threads) {
  std::vector<FpPoly> forms{hypersurface};
  for (std::size_t v = 0; v < hypersurface.nvars; ++v) forms.push_back(derivative(f, hypersurface, v));
  return common_zeros(f, forms, threads);
}

FpRows singular_points_on(const PrimeField& f, const std::vector<FpPoly>& generators, const FpRows& points,
                          std::size_t codim) {
  if (generators.empty()) return points;
  const std::size_t nvars = generators[0].nvars;
  std::vector<std::vector<FpPoly>> gradients;
  for (const auto& g : generators) {
    std::vector<FpPoly> grad;
    for (std::size_t v = 0; v < nvars; ++v) grad.push_back(derivative(f, g, v));
    gradients.push_back(std::move(grad));
  }
  FpRows out;
  for (const auto& pt : points) {
    FpRows jac;
    for (const auto& grad : gradients) {
      FpVector row;
      for (const auto& d : grad) row.push_back(evaluate(f, d, pt));
      jac.push_back(std::move(row));
    }
    if (fp_rank(f, std::move(jac)) < codim) out.push_back(pt);
  }
  return out;
}

}  // namespace disc24
