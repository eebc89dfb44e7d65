#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsocle/blowup.hpp"

using namespace qsocle;

namespace {

SemigroupPtr H479() { return NumericalSemigroup::from_generators({4, 7, 9}); }

PowersCache cache_for(int64_t s) { return PowersCache(quasi_socle(H479(), s, 2)); }

}  // namespace

TEST_CASE("powers cache") {
  PowersCache c = cache_for(7);
  CHECK(c.reduction_num() == 3);
  CHECK(c.I_pow(0) == HIdeal::unit_ideal(c.socle().H));
  CHECK(c.I_pow(1).min_generators() == std::vector<int64_t>{7, 8, 13});
  CHECK(c.I_pow(2).min_generators() == std::vector<int64_t>{14, 15, 16});
  CHECK(c.QI_pow(0) == c.socle().Q);
  CHECK(c.QI_pow(2) == product(c.socle().Q, c.I_pow(2)));
  CHECK(c.mI_pow(0) == c.socle().m);
  // stability past the reduction number, incl. lazily extended entries
  for (int64_t n = c.reduction_num(); n <= c.reduction_num() + 3; ++n)
    CHECK(c.I_pow(n + 1) == c.QI_pow(n));
  CHECK_THROWS_AS(
      PowersCache(quasi_socle(NumericalSemigroup::from_generators({2, 3}), 4, 2)),
      NotAReduction);
}

TEST_CASE("reduction numbers across the s range") {
  CHECK(cache_for(4).reduction_num() == 2);
  CHECK(cache_for(7).reduction_num() == 3);
  CHECK(cache_for(8).reduction_num() == 2);
  CHECK(cache_for(9).reduction_num() == 1);
  CHECK(cache_for(11).reduction_num() == 2);
  CHECK(cache_for(12).reduction_num() == 2);
}

TEST_CASE("G(I) and F(I) Cohen-Macaulayness") {
  for (int64_t s : {4, 7, 8, 9, 11, 12, 13, 14}) {
    CAPTURE(s);
    PowersCache c = cache_for(s);
    const bool g_cm = (s == 4 || s == 8 || s == 9);
    const bool f_cm = (s == 4 || s == 9);
    CHECK(is_G_cohen_macaulay(c) == g_cm);
    CHECK(is_F_cohen_macaulay(c) == f_cm);
  }
}

TEST_CASE("CM verdict agrees with torsion table emptiness") {
  for (int64_t s : {4, 7, 8, 9, 11, 12, 15, 16}) {
    CAPTURE(s);
    PowersCache c = cache_for(s);
    CHECK(is_G_cohen_macaulay(c) == h0_table_G(c).empty());
    CHECK(is_F_cohen_macaulay(c) == h0_table_F(c).empty());
  }
}

TEST_CASE("torsion tables, frozen entries") {
  PowersCache c11 = cache_for(11);
  const CohomologyTable g11 = h0_table_G(c11);
  CHECK(g11.total_length == 1);
  REQUIRE(g11.entries.count(0) == 1);
  CHECK(g11.entries.at(0) == std::vector<int64_t>{13});

  PowersCache c7 = cache_for(7);
  const CohomologyTable g7 = h0_table_G(c7);
  CHECK(g7.total_length == 2);
  REQUIRE(g7.entries.count(0) == 1);
  REQUIRE(g7.entries.count(1) == 1);
  CHECK(g7.entries.at(0) == std::vector<int64_t>{9});
  CHECK(g7.entries.at(1) == std::vector<int64_t>{17});
  const CohomologyTable f7 = h0_table_F(c7);
  CHECK_FALSE(f7.empty());

  PowersCache c9 = cache_for(9);
  CHECK(h0_table_G(c9).empty());
  CHECK(h0_table_F(c9).empty());
}

TEST_CASE("torsion tables stable under a deeper probe cap") {
  for (int64_t s : {4, 7, 8, 9, 11, 12, 15}) {
    CAPTURE(s);
    PowersCache c = cache_for(s);
    const int64_t r = c.reduction_num();
    CHECK(h0_table_G(c, r + 1).entries == h0_table_G(c, r + 2).entries);
    CHECK(h0_table_F(c, r + 1).entries == h0_table_F(c, r + 2).entries);
  }
}

TEST_CASE("Buchsbaum verdicts") {
  for (int64_t s : {4, 7, 8, 9, 11, 12, 13}) {
    CAPTURE(s);
    PowersCache c = cache_for(s);
    CHECK(is_G_buchsbaum(c) == (s != 7));
    CHECK(is_F_buchsbaum(c));
  }
}

TEST_CASE("Ratliff-Rush closure") {
  PowersCache c11 = cache_for(11);
  const HIdeal rr11 = ratliff_rush(c11);
  CHECK(rr11.min_generators() == std::vector<int64_t>{11, 12, 13, 14});
  CHECK(rr11 == sum(c11.socle().I, HIdeal::principal(c11.socle().H, 13)));
  CHECK(relative_length(rr11, c11.socle().I) == 1);

  // s = 9 is already Ratliff-Rush closed
  PowersCache c9 = cache_for(9);
  CHECK(ratliff_rush(c9) == c9.socle().I);

  // s = 15 is the s = 11 case translated by 4
  PowersCache c15 = cache_for(15);
  const HIdeal rr15 = ratliff_rush(c15);
  CHECK(c15.socle().I.min_generators() == std::vector<int64_t>{15, 16, 18, 21});
  CHECK(rr15 == sum(c15.socle().I, HIdeal::principal(c15.socle().H, 17)));
  CHECK(relative_length(rr15, c15.socle().I) == 1);

  // general sanity: I subseteq Itilde subseteq Qbar
  for (int64_t s : {4, 7, 8, 12}) {
    PowersCache c = cache_for(s);
    const HIdeal rr = ratliff_rush(c);
    CHECK(c.socle().I.is_subset_of(rr));
    CHECK(rr.order() >= s);
  }
}

TEST_CASE("scaling between parameters at or above the conductor") {
  const ScalingClaimResult a = check_scaling_claim(H479(), 11, 15);
  CHECK(a.translation_holds);
  CHECK(a.r1 == 2);
  CHECK(a.r2 == 2);
  CHECK(a.reduction_numbers_equal);

  const ScalingClaimResult b = check_scaling_claim(H479(), 12, 12);
  CHECK(b.translation_holds);
  CHECK(b.reduction_numbers_equal);

  auto G = NumericalSemigroup::from_generators({6, 7, 15});
  const ScalingClaimResult c = check_scaling_claim(G, 24, 30);
  CHECK(c.translation_holds);
  CHECK(c.reduction_numbers_equal);

  CHECK_THROWS_AS(check_scaling_claim(H479(), 8, 15), HypothesisViolated);
  CHECK_THROWS_AS(check_scaling_claim(H479(), 15, 11), HypothesisViolated);
}
