#include "fixtures.hpp"
#include "random_covers.hpp"
#include "sandwich/errors.hpp"

#include <doctest.h>

using namespace sandwich;
using namespace fixtures;

TEST_SUITE("sandwich") {
  TEST_CASE("make_sandwich validation") {
    Group g({2, 2});
    CHECK_NOTHROW(make_sandwich(cover0(g, {{{1, 1}, 4}, {{1, 0}, 2}}), cover0(g, {{{1, 0}, 2}, {{0, 1}, 8}})));
    CHECK_NOTHROW(hyperelliptic_pair());
    try {
      make_sandwich(cover0(Group({2}), {{{1}, 6}}), cover0(Group({3}), {{{1}, 3}, {{2}, 3}}));
      FAIL("expected group mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GroupMismatch);
    }
    try {
      make_sandwich(cover0(Group({2}), {{{1}, 6}}), cover0(Group({2}), {{{1}, 4}}));
      FAIL("expected genus error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("geometric genus and irregularity") {
    auto s = z22_family1_m4();
    CHECK(geometric_genus(s) == 3);
    CHECK(irregularity(s) == 0);
    auto t = z222_family_i_m4();
    CHECK(geometric_genus(t) == 3);
    CHECK(irregularity(t) == 0);
    SandwichSurface swapped{s.D, s.F};
    CHECK(geometric_genus(swapped) == geometric_genus(s));
  }

  TEST_CASE("canonical character") {
    auto s = z22_family1_m4();
    auto v1 = eigen_profile(s.F);
    auto v2 = eigen_profile(s.D);
    // products dimV1(chi) dimV2(-chi): only (0,1) is nonzero
    CHECK(v1.dim({0, 1}) * v2.dim({0, 1}) == 3);
    CHECK(v1.dim({1, 0}) * v2.dim({1, 0}) == 0);
    CHECK(v1.dim({1, 1}) * v2.dim({1, 1}) == 0);
    auto chi = canonical_character(s);
    REQUIRE(chi.has_value());
    CHECK(*chi == Character{0, 1});

    auto e = canonical_character(z28_elliptic_m4());
    REQUIRE(e.has_value());
    CHECK(*e == Character{1, 6});

    CHECK_FALSE(canonical_character(hyperelliptic_pair()).has_value());
    std::mt19937 rng(99);
    const std::vector<Group> gs = {Group({3}), Group({4}), Group({5}), Group({6})};
    int low = 0;
    for (int t = 0; t < 2000 && low < 5; ++t) {
      const Group& g = gs[t % gs.size()];
      auto s = make_sandwich(fixtures::random_cover(rng, g, 0, 2), fixtures::random_cover(rng, g, 0, 2));
      if (geometric_genus(s) >= 2) continue;
      ++low;
      try {
        canonical_character(s);
        FAIL("expected not-applicable");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotApplicable);
      }
    }
    CHECK(low > 0);
  }

  TEST_CASE("singular locus") {
    auto s = z22_family1_m4();
    auto loc = singular_locus(s);
    CHECK(loc.t_z == 40);
    REQUIRE(loc.records.size() == 1);
    CHECK(loc.records[0].n == 2);
    CHECK(loc.records[0].q == 1);
    CHECK(loc.records[0].count == 20);
    CHECK(loc.records[0].z_points == 40);
    CHECK(singular_locus(z222_family_i_m4()).t_z == 0);
    CHECK(singular_locus(z222_family_i_m4()).records.empty());
    CHECK(singular_locus(z28_elliptic_m4()).t_z == 0);
  }

  TEST_CASE("singular locus of a cyclic sandwich") {
    // Z/3: F and D both branched over (1) and (2); local types 1/3(1,1) and 1/3(1,2)
    Group g({3});
    auto s = make_sandwich(cover0(g, {{{1}, 2}, {{2}, 2}}), cover0(g, {{{1}, 2}, {{2}, 2}}));
    auto loc = singular_locus(s);
    CHECK(loc.t_z == 16);
    long long total = 0;
    for (const auto& r : loc.records) {
      CHECK(r.n == 3);
      CHECK(r.count == r.z_points);  // |G| / n = 1
      total += r.count;
    }
    CHECK(total == 16);
    REQUIRE(loc.records.size() == 2);
    CHECK(loc.records[0].q == 1);
    CHECK(loc.records[1].q == 2);
    CHECK(loc.records[0].count == 8);
  }

  TEST_CASE("Hirzebruch-Jung expansions") {
    CHECK(hj_expansion(2, 1) == std::vector<int>{2});
    CHECK(hj_expansion(8, 5) == std::vector<int>{2, 3, 2});
    CHECK(hj_expansion(8, 3) == std::vector<int>{3, 3});
    CHECK(hj_expansion(7, 1) == std::vector<int>{7});
    CHECK(hj_expansion(7, 6) == std::vector<int>(6, 2));
    CHECK_THROWS_AS(hj_expansion(8, 4), Error);
    CHECK_THROWS_AS(hj_expansion(1, 1), Error);
    CHECK(hj_evaluate({2, 3, 2}) == Rational(8, 5));
  }

  TEST_CASE("discrepancies") {
    auto d = discrepancies({2});
    CHECK(d.a == std::vector<Rational>{Rational(0)});
    CHECK(d.k2_correction == Rational(0));
    d = discrepancies({3, 3});
    CHECK(d.a == std::vector<Rational>{Rational(-1, 2), Rational(-1, 2)});
    CHECK(d.k2_correction == Rational(-1));
    d = discrepancies({2, 3, 2});
    CHECK(d.a == std::vector<Rational>{Rational(-1, 4), Rational(-1, 2), Rational(-1, 4)});
    CHECK(d.k2_correction == Rational(-1, 2));
    // 1/n(1,1): a single (-n)-curve with discrepancy -(n-2)/n
    for (int n = 2; n <= 12; ++n) CHECK(discrepancies({n}).a[0] == Rational(-(n - 2), n));
    CHECK_THROWS_AS(discrepancies({1, 3}), Error);
  }

  TEST_CASE("invariant reports") {
    auto r = invariants(z222_family_i_m4());
    CHECK(r.p_g == 3);
    CHECK(r.q == 0);
    CHECK(r.chi == 4);
    CHECK(r.euler_e == 16);
    CHECK(r.K2 == 32);
    CHECK(r.t_z == 0);

    r = invariants(z28_elliptic_m4());
    CHECK(r.p_g == 4);
    CHECK(r.q == 1);
    CHECK(r.chi == 4);
    CHECK(r.euler_e == 16);
    CHECK(r.K2 == 32);
    CHECK(r.g_D == 33);

    r = invariants(z22_family1_m4());
    CHECK(r.p_g == 3);
    CHECK(r.q == 0);
    CHECK(r.chi == 4);
    CHECK(r.euler_e == 36);
    CHECK(r.K2 == 12);
    CHECK(r.K2 + r.euler_e == 12 * r.chi);
  }

  TEST_CASE("invariants of a sandwich with non-node singularities") {
    // independent count: e(S) = (e(Z) - t)/|G| + sum count (len + 1)
    Group g({3});
    auto s = make_sandwich(cover0(g, {{{1}, 2}, {{2}, 2}}), cover0(g, {{{1}, 2}, {{2}, 2}}));
    auto r = invariants(s);
    // e(Z) = 4, t = 16, 8 points 1/3(1,1) (one curve), 8 points 1/3(1,2) (two curves)
    CHECK(r.euler_e == (4 - 16) / 3 + 8 * 2 + 8 * 3);
    // K^2 = 2*2*2/3 + 8*(-1/3)
    CHECK(r.K2 == 0);
    CHECK(r.p_g == 2);
    CHECK(r.chi == 3);
    auto rf = invariants(s, true);
    CHECK(rf.K2 == r.K2);
    CHECK(rf.euler_e == r.euler_e);
  }
}
