#include "disc24/scroll_calculus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace disc24 {

SplittingType::SplittingType(std::vector<long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error(ErrorCode::InvalidArgument, "splitting type must be nonempty");
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long SplittingType::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

SplittingType SplittingType::dual() const {
  std::vector<long> d;
  for (long x : degrees_) d.push_back(-x);
  return SplittingType(std::move(d));
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  std::vector<long> asc(degrees_.rbegin(), degrees_.rend());
  for (std::size_t i = 0; i < asc.size();) {
    std::size_t j = i;
    while (j < asc.size() && asc[j] == asc[i]) ++j;
    if (i) os << " + ";
    os << "O(" << asc[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

SplittingType balanced_splitting(long rank, long degree) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  // floor division so negative degrees balance too
  long q = degree / rank;
  long rem = degree % rank;
  if (rem < 0) {
    rem += rank;
    --q;
  }
  std::vector<long> d(rank, q);
  for (long i = 0; i < rem; ++i) d[i] += 1;
  return SplittingType(std::move(d));
}

long h0_splitting(const SplittingType& t) {
  long total = 0;
  for (long d : t.degrees()) total += std::max(d + 1, 0L);
  return total;
}

void ScrollProfile::validate() const {
  if (r < 2 || s < 1 || s > r || a < 1)
    throw Error(ErrorCode::InvalidArgument, "scroll profile needs r >= 2, 1 <= s <= r, a >= 1");
}

SplittingType ScrollProfile::e() const {
  validate();
  std::vector<long> d(s, -a);
  d.insert(d.end(), r - s, -a - 1);
  return SplittingType(std::move(d));
}

ScrollInvariants scroll_profile_invariants(const ScrollProfile& p) {
  p.validate();
  const long r = p.r, s = p.s, a = p.a;
  ScrollInvariants v{};
  v.n = r * (a + 2) - s - 1;
  v.d = r * (a + 1) - s;
  // Hom(O(-a)^s + O(-a-1)^(r-s), itself): diagonal blocks s^2, (r-s)^2,
  // one off-diagonal block with h^0(O(1)) = 2.
  v.aut_e = s * s + (r - s) * (r - s) + 2 * s * (r - s);
  v.aut_sigma = r * r + 2;
  const long n = v.n;
  v.hilb1 = n * n + 2 * n - r * r - 2;
  v.hilb2 = v.hilb1 + n + 2 * r;
  v.moduli1 = v.hilb2 - (n * n + 2 * n);
  v.hilb3 = n * n + 5 * n + 1 - r * r + 2 * r;
  v.moduli2 = v.hilb3 - ((n + 2) * (n + 2) - 1);
  return v;
}

SplittingType balanced_quotient_splitting(const SplittingType& e_dual, long quotient_rank) {
  if (quotient_rank < 1 || quotient_rank >= e_dual.rank())
    throw Error(ErrorCode::InvalidArgument, "quotient rank must satisfy 1 <= k < rank");
  return balanced_splitting(quotient_rank, e_dual.degree() + 2);
}

SplittingType extension_bundle_splitting(const SplittingType& f_dual) {
  return balanced_splitting(f_dual.rank() + 1, f_dual.degree() - 2);
}

std::string to_string(const PBundleClass& c) {
  std::ostringstream os;
  os << c.xi << "xi";
  if (c.f >= 0)
    os << " + " << c.f << "f";
  else
    os << " - " << -c.f << "f";
  return os.str();
}

long pbundle_intersection(const SplittingType& e, int xi_power, int f_power) {
  if (e.rank() != 3) throw Error(ErrorCode::InvalidArgument, "intersection numbers need a rank-3 bundle");
  if (xi_power < 0 || f_power < 0 || xi_power + f_power != 3)
    throw Error(ErrorCode::BadMonomial,
                "xi^" + std::to_string(xi_power) + " f^" + std::to_string(f_power) + " is not a top monomial");
  if (f_power >= 2) return 0;  // f^2 = 0
  if (f_power == 1) return 1;
  return -e.degree();
}

long class_degree(const SplittingType& e, const PBundleClass& c) {
  return c.xi * pbundle_intersection(e, 3, 0) + c.f * pbundle_intersection(e, 2, 1);
}

PBundleClass residual_class_in_pbundle(const PBundleClass& total, const PBundleClass& kept) {
  return PBundleClass{total.xi - kept.xi, total.f - kept.f};
}

namespace {

std::vector<long> r2s2(long a) { return {2 * a + 2}; }
std::vector<long> r2s1(long a) { return {2 * a + 3}; }
std::vector<long> r3s3_even(long a) { return {1 + 3 * a / 2, 1 + 3 * a / 2}; }
std::vector<long> r3s3_odd(long a) { return {(3 * a + 1) / 2, (3 * a + 3) / 2}; }
std::vector<long> r3s2_even(long a) { return {1 + 3 * a / 2, 2 + 3 * a / 2}; }
std::vector<long> r3s2_odd(long a) { return {(3 * a + 3) / 2, (3 * a + 3) / 2}; }
std::vector<long> r3s1_even(long a) { return {2 + 3 * a / 2, 2 + 3 * a / 2}; }
std::vector<long> r3s1_odd(long a) { return {(3 * a + 1) / 2, (3 * a + 3) / 2}; }

}  // namespace

const std::vector<ExampleEntry>& example_table() {
  static const std::vector<ExampleEntry> table = {
      {2, 2, true, r2s2, false},       {2, 2, false, r2s2, false},      {2, 1, true, r2s1, false},
      {2, 1, false, r2s1, false},      {3, 3, true, r3s3_even, false},  {3, 3, false, r3s3_odd, false},
      {3, 2, true, r3s2_even, false},  {3, 2, false, r3s2_odd, false},  {3, 1, true, r3s1_even, false},
      {3, 1, false, r3s1_odd, true},
  };
  return table;
}

std::vector<Check> example_table_checks(long a_max) {
  std::vector<Check> checks;
  for (const ExampleEntry& row : example_table()) {
    std::string printed_all, computed_all;
    bool all_match = true;
    for (long a = 1; a <= a_max; ++a) {
      if ((a % 2 == 0) != row.a_even) continue;
      const ScrollProfile profile{row.r, row.s, a};
      const SplittingType printed(row.printed(a));
      const SplittingType computed = balanced_quotient_splitting(profile.e_dual(), row.r - 1);
      all_match = all_match && printed == computed;
      const std::string sep = printed_all.empty() ? "" : "; ";
      printed_all += sep + "a=" + std::to_string(a) + ": " + printed.to_string();
      computed_all += sep + "a=" + std::to_string(a) + ": " + computed.to_string();
    }
    const std::string parity = row.a_even ? "even" : "odd";
    const std::string name = "example_r" + std::to_string(row.r) + "_s" + std::to_string(row.s) + "_a_" + parity;
    const std::string ref = "generic quotient of E^v, r=" + std::to_string(row.r) + " s=" + std::to_string(row.s) +
                            " a " + parity;
    Check c = bool_check(name, all_match, printed_all, computed_all, Provenance::Literature, ref);
    if (row.suspected_typo) c.status = CheckStatus::Flagged;
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace disc24
