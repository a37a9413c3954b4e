#include <doctest.h>

#include <algorithm>

#include "disc24/scroll_calculus.hpp"

using namespace disc24;

TEST_CASE("splitting types") {
  const SplittingType t({3, 5, 4});
  CHECK(t.degrees() == std::vector<long>{5, 4, 3});
  CHECK(t.degree() == 12);
  CHECK_FALSE(t.balanced());
  CHECK(t.dual().degrees() == std::vector<long>{-3, -4, -5});
  CHECK(SplittingType({4, 4, 5}).to_string() == "O(4)^2 + O(5)");
  CHECK(balanced_splitting(3, 7) == SplittingType({2, 2, 3}));
  CHECK(balanced_splitting(2, -3) == SplittingType({-1, -2}));
  CHECK_THROWS_AS(SplittingType({}), Error);
}

TEST_CASE("h0 agrees with a direct count") {
  for (long rank = 1; rank <= 5; ++rank)
    for (long deg = -8; deg <= 15; ++deg) {
      const SplittingType t = balanced_splitting(rank, deg);
      long count = 0;
      for (long d : t.degrees()) count += std::max(0L, d + 1);
      CHECK(h0_splitting(t) == count);
      CHECK(t.balanced());
      CHECK(t.degree() == deg);
    }
}

TEST_CASE("profile invariants") {
  const ScrollInvariants a = scroll_profile_invariants({3, 2, 1});
  CHECK(a.n == 6);
  CHECK(a.d == 4);
  CHECK(a.aut_sigma == 11);
  CHECK(a.aut_e == 9);
  CHECK(a.moduli1 == a.moduli2);
  const ScrollInvariants b = scroll_profile_invariants({2, 2, 3});
  CHECK(b.n == 7);
  CHECK(b.d == 6);
  CHECK_THROWS_AS(scroll_profile_invariants({1, 1, 1}), Error);
  CHECK_THROWS_AS(scroll_profile_invariants({3, 4, 1}), Error);
  CHECK_THROWS_AS(scroll_profile_invariants({3, 0, 1}), Error);
  CHECK_THROWS_AS(scroll_profile_invariants({3, 1, 0}), Error);
}

TEST_CASE("moduli counts agree on the whole grid") {
  for (long r = 2; r <= 6; ++r)
    for (long s = 1; s <= r; ++s)
      for (long a = 1; a <= 6; ++a) {
        const ScrollProfile p{r, s, a};
        const ScrollInvariants v = scroll_profile_invariants(p);
        CHECK(v.moduli1 == v.moduli2);
        CHECK(v.n + 1 == h0_splitting(p.e_dual()));
      }
}

TEST_CASE("quotients and extensions") {
  const SplittingType e_dual({4, 4, 4});
  const SplittingType q = balanced_quotient_splitting(e_dual, 2);
  CHECK(q == SplittingType({7, 7}));
  CHECK_THROWS_AS(balanced_quotient_splitting(e_dual, 3), Error);
  CHECK_THROWS_AS(balanced_quotient_splitting(e_dual, 0), Error);
  CHECK(extension_bundle_splitting(SplittingType({4, 4})) == SplittingType({2, 2, 2}));
  CHECK(extension_bundle_splitting(SplittingType({7})) == SplittingType({2, 3}));
}

TEST_CASE("example table: one suspected row, flagged") {
  const auto checks = example_table_checks(6);
  CHECK(checks.size() == example_table().size());
  std::size_t flagged = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Flagged) {
      ++flagged;
      CHECK(c.name == "example_r3_s1_a_odd");
      CHECK(c.expected != c.actual);
    } else {
      CHECK(c.status == CheckStatus::Pass);
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("P(E) intersection numbers") {
  const SplittingType e({-1, -1, -2});
  CHECK(pbundle_intersection(e, 3, 0) == 4);
  CHECK(pbundle_intersection(e, 2, 1) == 1);
  CHECK(pbundle_intersection(e, 1, 2) == 0);
  CHECK(pbundle_intersection(e, 0, 3) == 0);
  CHECK_THROWS_AS(pbundle_intersection(e, 2, 0), Error);
  CHECK_THROWS_AS(pbundle_intersection(SplittingType({0, 0}), 2, 0), Error);
  CHECK(class_degree(e, {2, -2}) == 6);
  CHECK(class_degree(e, {1, 2}) == 6);
  CHECK(residual_class_in_pbundle({3, 0}, {2, -2}) == PBundleClass{1, 2});
  CHECK(to_string(PBundleClass{1, 2}) == "1xi + 2f");
}
