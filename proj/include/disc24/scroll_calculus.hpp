#pragma once

// Splitting types of bundles on P^1, scroll dimension counts and
// intersection numbers on P(E) for rank-three E.

#include <string>
#include <vector>

#include "disc24/certificate.hpp"
#include "disc24/errors.hpp"

namespace disc24 {

/// Multiset of twists, kept in descending order.
class SplittingType {
 public:
  explicit SplittingType(std::vector<long> degrees);

  const std::vector<long>& degrees() const { return degrees_; }
  long rank() const { return static_cast<long>(degrees_.size()); }
  long degree() const;
  bool balanced() const { return degrees_.front() - degrees_.back() <= 1; }
  SplittingType dual() const;

  /// "O(4)^2 + O(5)"
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<long> degrees_;
};

/// Balanced splitting of the given rank and degree.
SplittingType balanced_splitting(long rank, long degree);

/// h^0 = sum max(d_i + 1, 0)
long h0_splitting(const SplittingType& t);

/// E = O(-a)^s + O(-a-1)^(r-s).
struct ScrollProfile {
  long r = 2;
  long s = 1;
  long a = 1;

  void validate() const;
  SplittingType e() const;
  SplittingType e_dual() const { return e().dual(); }
};

struct ScrollInvariants {
  long n;          // ambient P^n
  long d;          // degree of the scroll
  long aut_e;      // dim Aut(E)
  long aut_sigma;  // dim Aut(Sigma) = r^2 + 2
  long hilb1;
  long hilb2;
  long moduli1;
  long hilb3;
  long moduli2;
};

/// Throws InvalidArgument for an invalid profile.
ScrollInvariants scroll_profile_invariants(const ScrollProfile& p);

/// Generic quotient in 0 -> O(-2) -> E^v -> F^v -> 0 with F^v of rank k.
/// Throws InvalidArgument unless 1 <= k < rank.
SplittingType balanced_quotient_splitting(const SplittingType& e_dual, long quotient_rank);

/// Generic extension of F^v by O(-2).
SplittingType extension_bundle_splitting(const SplittingType& f_dual);

/// Class a xi + b f on P(E).
struct PBundleClass {
  long xi = 0;
  long f = 0;
  friend bool operator==(const PBundleClass&, const PBundleClass&) = default;
};

std::string to_string(const PBundleClass& c);

/// xi^i f^j on P(E), rank E = 3, i + j = 3 (f^2 = 0). Throws BadMonomial.
long pbundle_intersection(const SplittingType& e, int xi_power, int f_power);

/// (a xi + b f) . xi^2 = a xi^3 + b.
long class_degree(const SplittingType& e, const PBundleClass& c);

PBundleClass residual_class_in_pbundle(const PBundleClass& total, const PBundleClass& kept);

/// One row of the generic-quotient example table.
struct ExampleEntry {
  long r;
  long s;
  bool a_even;
  /// Printed splitting as a function of a.
  std::vector<long> (*printed)(long a);
  /// Known misprint: reported as flagged, never as pass or fail.
  bool suspected_typo;
};

const std::vector<ExampleEntry>& example_table();

/// One check per table row, covering every a in [1, a_max] of the row parity.
std::vector<Check> example_table_checks(long a_max);

}  // namespace disc24
