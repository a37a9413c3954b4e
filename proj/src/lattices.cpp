#include "disc24/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace disc24 {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "Gram matrix is not symmetric");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Int Lattice::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from lattice rank");
  return dot(x * gram_, y);
}

Rat Lattice::pair(const RatVector& x, const RatVector& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from lattice rank");
  return dot(x * to_rational(gram_), y);
}

Lattice hyperbolic_plane() { return Lattice(IntMatrix{{0, 1}, {1, 0}}); }

Lattice e8_negative() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return Lattice(std::move(g));
}

Lattice a2_like() { return Lattice(IntMatrix{{-2, -1}, {-1, -2}}); }

Lattice rank_one(long d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "rank1 needs a nonzero entry");
  return Lattice(IntMatrix{{d}});
}

Lattice standard_lattice(std::string_view name) {
  if (name == "U") return hyperbolic_plane();
  if (name == "E8neg") return e8_negative();
  if (name == "A2like") return a2_like();
  constexpr std::string_view prefix = "rank1(";
  if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix &&
      name.back() == ')') {
    std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    try {
      std::size_t used = 0;
      long d = std::stol(digits, &used);
      if (used == digits.size() && d != 0) return rank_one(d);
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown lattice name '" + std::string(name) + "'");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) { return Lattice(a.gram().direct_sum(b.gram())); }

IntMatrix gram_of(const Lattice& lattice, const std::vector<IntVector>& vectors) {
  IntMatrix out(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      out(i, j) = lattice.pair(vectors[i], vectors[j]);
      out(j, i) = out(i, j);
    }
  return out;
}

LatticeInvariants lattice_invariants(const Lattice& lattice) {
  LatticeInvariants inv;
  inv.rank = lattice.rank();
  Int det = determinant(lattice.gram());
  inv.disc = abs(det);
  inv.det_sign = sgn(det);
  inv.signature = signature_of_symmetric(lattice.gram());
  inv.is_even = lattice.is_even();
  return inv;
}

// ---------------------------------------------------------------------------

SublatticeEmbedding::SublatticeEmbedding(Lattice ambient_lattice, IntMatrix basis_rows)
    : ambient(std::move(ambient_lattice)), basis(std::move(basis_rows)) {
  if (basis.rows() > 0 && basis.cols() != ambient.rank())
    throw Error(ErrorCode::DimensionMismatch, "basis rows must have ambient length");
  if (basis.rows() == 0) basis = IntMatrix(0, ambient.rank());
  if (rank(basis) != basis.rows())
    throw Error(ErrorCode::InvalidArgument, "sublattice basis rows are linearly dependent");
}

Lattice SublatticeEmbedding::induced() const {
  return Lattice(basis * ambient.gram() * basis.transpose());
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& emb) {
  IntMatrix pairing = emb.basis * emb.ambient.gram();
  return SublatticeEmbedding(emb.ambient, kernel_basis(pairing));
}

Saturation saturate(const SublatticeEmbedding& emb) {
  if (emb.basis.rows() == 0) return Saturation{emb, Int(1)};
  // The saturated closure of the row space is the kernel of its kernel.
  IntMatrix closure = kernel_basis(kernel_basis(emb.basis));
  Int index = 1;
  for (const Int& d : smith_normal_form(emb.basis).invariant_factors()) index *= d;
  return Saturation{SublatticeEmbedding(emb.ambient, std::move(closure)), index};
}

GlueVector GlueVector::reduced() const {
  if (denominator <= 0) throw Error(ErrorCode::InvalidGlue, "glue denominator must be positive");
  Int g = denominator;
  for (const Int& x : numerator) g = gcd(g, x);
  GlueVector out;
  out.denominator = denominator / g;
  for (const Int& x : numerator) out.numerator.push_back(x / g);
  if (out.denominator == 1) throw Error(ErrorCode::InvalidGlue, "glue vector is integral");
  return out;
}

Overlattice overlattice_from_glue(const Lattice& lattice, const GlueVector& glue) {
  if (glue.numerator.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch, "glue vector length differs from lattice rank");
  const GlueVector g = glue.reduced();
  const Int& den = g.denominator;

  IntVector paired = g.numerator * lattice.gram();
  for (const Int& x : paired)
    if (x % den != 0)
      throw Error(ErrorCode::NotIntegralPairing,
                  "glue pairs to " + Rat(x, den).get_str() + " with a basis vector");
  Rat self = Rat(dot(paired, g.numerator), den * den);
  self.canonicalize();
  if (self.get_den() != 1 || mpz_odd_p(self.get_num().get_mpz_t()))
    throw Error(ErrorCode::NotEven, "glue self-pairing is " + self.get_str());

  // Generators in units of 1/den: den * e_i and the numerator.
  const std::size_t n = lattice.rank();
  IntMatrix gens(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
  gens.set_row(n, g.numerator);
  IntMatrix basis = hermite_row_basis(gens);

  IntMatrix scaled = basis * lattice.gram() * basis.transpose();
  const Int den2 = den * den;
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = scaled(i, j) / den2;

  RatMatrix rational_basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rational_basis(i, j) = Rat(basis(i, j), den);
      rational_basis(i, j).canonicalize();
    }
  return Overlattice{Lattice(std::move(gram)), den, std::move(rational_basis)};
}

bool verify_isometry(const Lattice& from, const Lattice& to, const IntMatrix& t) {
  if (from.rank() != to.rank() || t.rows() != to.rank() || t.cols() != from.rank())
    throw Error(ErrorCode::DimensionMismatch, "isometry matrix has the wrong shape");
  if (t * from.gram() * t.transpose() != to.gram()) return false;
  return abs(determinant(t)) == 1;
}

// ---------------------------------------------------------------------------
// Definite isometry search

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
RatMatrix quadratic_completion(const IntMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix q = to_rational(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw Error(ErrorCode::NotDefinite, "form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

}  // namespace

std::vector<IntVector> vectors_of_norm(const IntMatrix& positive_gram, const Int& norm) {
  const std::size_t n = positive_gram.rows();
  const RatMatrix q = quadratic_completion(positive_gram);
  std::vector<IntVector> out;
  IntVector x(n);

  std::function<void(std::size_t, const Rat&)> descend = [&](std::size_t level, const Rat& remaining) {
    const std::size_t i = level - 1;
    Rat center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center += q(i, j) * x[j];
    const double radius = std::sqrt(std::max(0.0, Rat(remaining / q(i, i)).get_d()));
    const double c = center.get_d();
    const long lo = static_cast<long>(std::floor(-c - radius)) - 1;
    const long hi = static_cast<long>(std::ceil(-c + radius)) + 1;
    for (long xi = lo; xi <= hi; ++xi) {
      Rat shifted = Rat(xi) + center;
      Rat term = q(i, i) * shifted * shifted;
      if (term > remaining) continue;
      x[i] = xi;
      Rat rest = remaining - term;
      if (i == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        descend(i, rest);
      }
    }
    x[i] = 0;
  };
  if (n == 0) return out;
  descend(n, Rat(norm));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

std::optional<IntMatrix> search_embedding(const IntMatrix& source_pos, const IntMatrix& target_pos) {
  const std::size_t n = source_pos.rows();
  std::vector<std::vector<IntVector>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    candidates[i] = vectors_of_norm(source_pos, target_pos(i, i));
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<IntVector> chosen(n);
  std::vector<IntVector> chosen_times_gram(n);

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == n) {
      IntMatrix t = IntMatrix::from_rows(chosen, n);
      return abs(determinant(t)) == 1;
    }
    for (const IntVector& cand : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (dot(chosen_times_gram[j], cand) != target_pos(j, i)) ok = false;
      if (!ok) continue;
      chosen[i] = cand;
      chosen_times_gram[i] = cand * source_pos;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return IntMatrix::from_rows(chosen, n);
}

Int max_diagonal(const IntMatrix& g) {
  Int m = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) m = std::max(m, Int(abs(g(i, i))));
  return m;
}

}  // namespace

std::optional<IntMatrix> find_isometry_definite(const Lattice& from, const Lattice& to) {
  if (from.rank() > 8 || to.rank() > 8)
    throw Error(ErrorCode::NotDefinite, "definite isometry search is limited to rank 8");
  const LatticeInvariants a = lattice_invariants(from);
  const LatticeInvariants b = lattice_invariants(to);
  auto definite = [](const LatticeInvariants& inv) {
    return inv.signature.n_zero == 0 && (inv.signature.n_plus == 0 || inv.signature.n_minus == 0);
  };
  if (!definite(a) || !definite(b)) throw Error(ErrorCode::NotDefinite, "lattice is not definite");
  if (a.rank != b.rank || a.disc != b.disc || a.det_sign != b.det_sign || !(a.signature == b.signature) ||
      a.is_even != b.is_even)
    return std::nullopt;
  if (a.rank == 0) return IntMatrix(0, 0);

  const Int sign = a.signature.n_plus == 0 ? -1 : 1;
  const IntMatrix g1 = sign * from.gram();
  const IntMatrix g2 = sign * to.gram();

  // Enumerate in whichever lattice needs the shorter vectors.
  if (max_diagonal(g2) <= max_diagonal(g1)) return search_embedding(g1, g2);
  auto reverse = search_embedding(g2, g1);
  if (!reverse) return std::nullopt;
  return unimodular_inverse(*reverse);
}

}  // namespace disc24
