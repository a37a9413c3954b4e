#pragma once

// Integral lattices given by symmetric Gram matrices, their sublattices,
// saturations, overlattices and isometry certificates.

#include <optional>
#include <string_view>

#include "disc24/exact_linalg.hpp"

namespace disc24 {

class Lattice {
 public:
  /// Throws NonSymmetric if the Gram matrix is not symmetric.
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  bool is_even() const;
  Int pair(const IntVector& x, const IntVector& y) const;
  Rat pair(const RatVector& x, const RatVector& y) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
};

Lattice hyperbolic_plane();
/// Negative definite E8 root lattice (negated Cartan matrix).
Lattice e8_negative();
/// [[-2,-1],[-1,-2]]
Lattice a2_like();
/// [[d]], d nonzero.
Lattice rank_one(long d);

/// Names: "U", "E8neg", "A2like", "rank1(d)". Throws UnknownName.
Lattice standard_lattice(std::string_view name);

Lattice direct_sum(const Lattice& a, const Lattice& b);

/// Pairwise products of the given coordinate vectors. Throws DimensionMismatch.
IntMatrix gram_of(const Lattice& lattice, const std::vector<IntVector>& vectors);

struct LatticeInvariants {
  std::size_t rank = 0;
  Int disc;      // |det|
  int det_sign;  // -1, 0, +1
  Signature signature;
  bool is_even = false;
};

LatticeInvariants lattice_invariants(const Lattice& lattice);

/// A sublattice given by basis rows in ambient coordinates.
struct SublatticeEmbedding {
  SublatticeEmbedding(Lattice ambient, IntMatrix basis);

  Lattice ambient;
  IntMatrix basis;

  /// Gram of the sublattice, basis * G * basis^T.
  Lattice induced() const;
};

/// Saturated sublattice of ambient vectors orthogonal to every basis row.
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& emb);

struct Saturation {
  SublatticeEmbedding closure;
  Int index;
};

/// Primitive closure of the span, with the index of the input in it.
Saturation saturate(const SublatticeEmbedding& emb);

/// numerator / denominator in ambient coordinates.
struct GlueVector {
  IntVector numerator;
  Int denominator;

  /// Divides out the common content. Throws InvalidGlue if the reduced
  /// denominator is 1 (the vector is already in the lattice).
  GlueVector reduced() const;
};

struct Overlattice {
  Lattice lattice;
  Int index;
  /// Rows: the new basis, as rational vectors in the old coordinates.
  RatMatrix basis;
};

/// L + Z*glue. Throws InvalidGlue, NotIntegralPairing or NotEven.
Overlattice overlattice_from_glue(const Lattice& lattice, const GlueVector& glue);

/// True iff T * G1 * T^T == G2 and |det T| == 1. Throws DimensionMismatch.
bool verify_isometry(const Lattice& from, const Lattice& to, const IntMatrix& t);

/// Search for T with T * G1 * T^T == G2 for definite lattices of rank <= 8.
/// Deterministic: the first solution in lexicographic candidate order.
/// Throws NotDefinite.
std::optional<IntMatrix> find_isometry_definite(const Lattice& from, const Lattice& to);

/// All x with x^T A x == norm for a positive definite Gram A, sorted
/// lexicographically.
std::vector<IntVector> vectors_of_norm(const IntMatrix& positive_gram, const Int& norm);

}  // namespace disc24
