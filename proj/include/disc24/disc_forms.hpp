#pragma once

// Discriminant groups L*/L with their finite quadratic forms.

#include <cstdint>
#include <string>
#include <vector>

#include "disc24/lattices.hpp"

namespace disc24 {

/// q-values of an even lattice live in Q/2Z; an odd lattice only carries
/// the pairing, so its "q" is b(x,x) in Q/Z.
enum class QModulus { Two, One };

/// Coefficients of an element on the generators, each in [0, d_i).
using FqfElement = std::vector<std::int64_t>;

struct FiniteQuadraticForm {
  /// Nontrivial invariant factors d1 | d2 | ... (empty for the trivial group).
  IntVector invariant_factors;
  std::vector<Rat> q_values;  // reduced to [0, modulus)
  RatMatrix pairings;         // reduced to [0, 1)
  QModulus modulus = QModulus::Two;
  /// Generator lifts in the source lattice's dual, one row each (may be empty
  /// for forms not built from a lattice).
  RatMatrix generator_lifts;

  Int order() const;
  Rat q(const FqfElement& x) const;
  Rat b(const FqfElement& x, const FqfElement& y) const;
  /// Element of order dividing the group exponent, reduced mod d_i.
  FqfElement reduce(FqfElement x) const;
  std::int64_t element_order(const FqfElement& x) const;
  /// All elements in lexicographic order. Throws TooLarge above `limit`.
  std::vector<FqfElement> elements(std::uint64_t limit) const;

  std::string describe() const;
};

/// x mod m in [0, m).
Rat reduce_mod(const Rat& x, const Int& m);

/// Throws Degenerate when det(G) == 0.
FiniteQuadraticForm discriminant_form(const Lattice& lattice);

/// Elements with q == 0 (in the form's modulus). Throws TooLarge above 10^6.
std::vector<FqfElement> isotropic_elements(const FiniteQuadraticForm& form);

/// Brute-force search for an isomorphism respecting q and b. Orders up to 10^4,
/// otherwise TooLarge.
bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

/// H^perp / H for the cyclic subgroup H generated by an isotropic element.
FiniteQuadraticForm isotropic_quotient(const FiniteQuadraticForm& form, const FqfElement& isotropic);

}  // namespace disc24
