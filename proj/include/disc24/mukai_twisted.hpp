#pragma once

// Mukai lattice arithmetic on a K3 surface with a fixed ordered basis
// (u1,v1,u2,v2,u3,v3,e1..e8,f1..f8) of U^3 + (-E8)^2, and B-field twists.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "disc24/certificate.hpp"
#include "disc24/lattices.hpp"

namespace disc24 {

inline constexpr std::size_t kK3Rank = 22;

/// Rational vector in H^2(S, Q) in the fixed basis. Integral vectors are
/// K3 classes; rational ones also serve as B-fields.
struct K3Vector {
  std::array<Rat, kK3Rank> c{};

  bool is_integral() const;
  IntVector to_integer() const;
  static K3Vector from_integer(const IntVector& v);

  K3Vector& operator+=(const K3Vector& o);
  K3Vector& operator-=(const K3Vector& o);
  friend K3Vector operator+(K3Vector a, const K3Vector& b) { return a += b; }
  friend K3Vector operator-(K3Vector a, const K3Vector& b) { return a -= b; }
  friend K3Vector operator*(const Rat& s, K3Vector a);
  friend bool operator==(const K3Vector&, const K3Vector&) = default;
};

using K3Class = K3Vector;
using BField = K3Vector;

/// U^3 + (-E8)^2 in the fixed basis order.
const Lattice& k3_lattice();
Rat k3_pairing(const K3Vector& a, const K3Vector& b);

/// Basis vectors by name ("u1", "v3", "e5", "f8"). Throws UnknownName.
K3Vector k3_basis(std::string_view name);
/// The degree-six class f = u1 + 3 v1.
K3Vector degree_six_class();
/// B = (v1 + u2 - v2) / 2.
BField standard_b_field();

std::string to_string(const K3Vector& v);

/// (r, D, s) in H^0 + H^2 + H^4.
struct MukaiVector {
  Rat r;
  K3Vector d;
  Rat s;

  bool is_integral() const;
  MukaiVector& operator+=(const MukaiVector& o);
  MukaiVector& operator-=(const MukaiVector& o);
  friend MukaiVector operator+(MukaiVector a, const MukaiVector& b) { return a += b; }
  friend MukaiVector operator-(MukaiVector a, const MukaiVector& b) { return a -= b; }
  friend MukaiVector operator*(const Rat& s, MukaiVector a);
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// Parses sums such as "2-(v1+u2-v2)" or "-6+3(v1+u2-v2)-f+2[pt]": bare
/// numbers are the H^0 part, "pt" / "[pt]" the point class, "f" the
/// degree-six class, rational coefficients as "1/2". Throws InvalidArgument.
MukaiVector parse_mukai(std::string_view text);

std::string to_string(const MukaiVector& v);

/// D1.D2 - r1 s2 - r2 s1
Rat mukai_pairing(const MukaiVector& x, const MukaiVector& y);

/// exp(B)(r, D, s) = (r, D + rB, s + B.D + r B^2 / 2)
MukaiVector exp_b(const MukaiVector& x, const BField& b);

RatMatrix gram_of_mukai(const std::vector<MukaiVector>& vectors);

struct BKernel {
  SublatticeEmbedding sublattice;
  Int index;
};

/// {x in ambient : B.x integral} and its index. The embedding must live in
/// k3_lattice().
BKernel b_kernel_sublattice(const BField& b, const SublatticeEmbedding& ambient);

struct OrthogonalityEntry {
  Rat pairing;
  bool orthogonal;
};

std::vector<OrthogonalityEntry> orthogonality_report(const MukaiVector& v, const std::vector<MukaiVector>& others);

// ---------------------------------------------------------------------------
// Lattice chain of a discriminant-24 cubic fourfold and its Fano variety.

/// (g, g) for the Plucker polarization of the Fano variety of lines.
inline constexpr long kFanoPolarizationNorm = 6;
/// (g, g) for the polarization of the eightfold built from twisted cubics.
inline constexpr long kEightfoldPolarizationNorm = 2;
/// The primitive cohomology of the cubic maps to the Fano side with the
/// intersection form negated.
inline constexpr long kPrimitiveSignFlip = -1;

struct Fano24Options {
  /// Columns are the images of (h^2, W).
  IntMatrix involution{{1, 4}, {0, -1}};
  /// The index-two extension glues (8)-generator / glue_denominator.
  long glue_denominator = 2;
};

/// Gram [[3,6],[6,20]] of <h^2, W>.
Lattice cubic_disc24_lattice();
/// A2like + (8) + U + (-E8)^2, the complement of {g, varpi}.
Lattice fano_complement_lattice();
/// (-6) + U + U + (-E8)^2.
Lattice degree_six_primitive_lattice();
/// Basis change w = 3c + 2(a+b), u2 = c+a, v2 = c+b, padded by the identity.
IntMatrix degree_six_certificate();

/// Runs every lattice identity of the chain; sub-errors propagate.
std::vector<Check> fano24_chain(const Fano24Options& options = {});

struct CriterionMatrix {
  IntMatrix gram;
  Int determinant;
  bool criterion;  // a odd
};

/// Gram of <h^2, W, M> = [[3,6,m],[6,20,a],[m,a,s]].
CriterionMatrix criterion_matrix(long m, long a, long s);

/// Norms of v - 2a and 3g - 2varpi on the abstract rank-two lattices.
std::vector<Check> p4_embedding_check();

}  // namespace disc24
