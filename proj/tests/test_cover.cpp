#include "sandwich/cover.hpp"
#include "sandwich/errors.hpp"

#include <doctest.h>

#include <set>

using namespace sandwich;

namespace {

CoverData cover0(const Group& g, std::vector<BranchEntry> br) { return make_cover(g, 0, std::move(br), {}); }

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("make_cover validation") {
    CHECK_NOTHROW(cover0(Group({2}), {{{1}, 6}}));
    CHECK_NOTHROW(cover0(Group({2, 2}), {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 3}}));
    try {
      cover0(Group({2, 2}), {{{1, 0}, 1}, {{0, 1}, 1}});
      FAIL("expected invalid monodromy");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidMonodromy);
    }
    try {
      cover0(Group({2, 2}), {{{1, 0}, 4}});
      FAIL("expected disconnected cover");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DisconnectedCover);
    }
    try {
      cover0(Group({2}), {{{0}, 2}, {{1}, 6}});
      FAIL("expected invalid input");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("bundle degrees") {
    auto c = cover0(Group({2, 2}), {{{1, 0}, 2}, {{0, 1}, 8}});
    CHECK(bundle_degree(c, {0, 1}) == 4);
    CHECK(bundle_degree(c, {1, 0}) == 1);
    CHECK(bundle_degree(c, {0, 0}) == 0);
    auto f = cover0(Group({2, 8}), {{{0, 7}, 1}, {{1, 4}, 1}, {{1, 5}, 1}});
    CHECK(bundle_degree(f, {0, 1}) == 2);
  }

  TEST_CASE("eigenspace dimensions, Z/2xZ/8 row") {
    // For this branch the stated formula puts the three characters at the
    // inverses of the tabulated ones; the inverse branch gives the table's set.
    Group g({2, 8});
    auto f = cover0(g, {{{0, 7}, 1}, {{1, 4}, 1}, {{1, 5}, 1}});
    std::set<Character> sup;
    for (const auto& c : eigen_profile(f).support()) sup.insert(c);
    CHECK(sup == std::set<Character>{{0, 7}, {0, 5}, {1, 6}});
    for (const auto& c : sup) CHECK(eigen_dim(f, c) == 1);
    auto finv = cover0(g, {{{0, 1}, 1}, {{1, 4}, 1}, {{1, 3}, 1}});
    std::set<Character> sup2;
    for (const auto& c : eigen_profile(finv).support()) sup2.insert(c);
    CHECK(sup2 == std::set<Character>{{0, 1}, {0, 3}, {1, 2}});
  }

  TEST_CASE("eigenspace dimensions over an elliptic base") {
    Group g({2, 2});
    auto c = make_cover(g, 1, {{{1, 1}, 2}}, {{1, 0}, {0, 0}});
    CHECK(eigen_dim(c, {0, 0}) == 1);
    CHECK(eigen_dim(c, {1, 0}) == 1);
    CHECK(eigen_dim(c, {0, 1}) == 1);
    CHECK(eigen_dim(c, {1, 1}) == 0);
    CHECK(genus(c) == 3);
  }

  TEST_CASE("genus") {
    CHECK(genus(cover0(Group({2, 2}), {{{1, 1}, 4}, {{1, 0}, 2}})) == 3);
    CHECK(genus(cover0(Group({2, 2, 2}), {{{1, 0, 0}, 8}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}})) == 17);
    CHECK(genus(cover0(Group({2}), {{{1}, 6}})) == 2);
    CHECK(riemann_hurwitz_genus(Group({8}), 0, {{{4}, 1}, {{1}, 1}, {{3}, 1}}) == Rational(2));
  }

  TEST_CASE("enumerate covers") {
    CoverConstraints cons;
    cons.genus = 2;
    auto z3 = enumerate_covers(Group({3}), 0, cons);
    REQUIRE(z3.size() == 1);
    CHECK(z3[0].branch.size() == 2);
    for (const auto& e : z3[0].branch) CHECK(e.mult == 2);

    auto v4 = enumerate_covers(Group({2, 2}), 0, cons);
    REQUIRE(v4.size() == 1);
    std::multiset<int> mults;
    for (const auto& e : v4[0].branch) mults.insert(e.mult);
    CHECK(mults == std::multiset<int>{1, 1, 3});

    CoverConstraints dims;
    dims.genus = 2;
    dims.dims = {{{1}, 2}};
    auto z2 = enumerate_covers(Group({2}), 0, dims);
    REQUIRE(z2.size() == 1);
    CHECK(z2[0].branch == std::vector<BranchEntry>{{{1}, 6}});

    CHECK_THROWS_AS(enumerate_covers(Group({2}), 0, CoverConstraints{}), Error);
  }

  TEST_CASE("enumeration without automorphism dedup covers every orbit") {
    CoverConstraints cons;
    cons.genus = 3;
    cons.up_to_automorphism = false;
    Group g({2, 4});
    auto all = enumerate_covers(g, 0, cons);
    cons.up_to_automorphism = true;
    auto reps = enumerate_covers(g, 0, cons);
    std::set<BranchKey> orbit_keys;
    for (const auto& c : all) orbit_keys.insert(canonical_branch_key(g, c.branch));
    std::set<BranchKey> rep_keys;
    for (const auto& c : reps) rep_keys.insert(canonical_branch_key(g, c.branch));
    CHECK(orbit_keys == rep_keys);
    CHECK(rep_keys.size() == reps.size());
  }

  TEST_CASE("eigen_dim is Aut-equivariant") {
    Group g({2, 4});
    auto c = cover0(g, {{{0, 1}, 2}, {{1, 2}, 1}, {{1, 0}, 1}});
    for (const auto& phi : automorphisms(g)) {
      std::vector<BranchEntry> br;
      for (const auto& e : c.branch) br.push_back({phi.apply(g, e.elem), e.mult});
      auto c2 = cover0(g, br);
      for (const auto& chi : g.elements()) CHECK(eigen_dim(c2, dual_apply(g, phi, chi)) == eigen_dim(c, chi));
    }
  }

  TEST_CASE("canonical twist") {
    Group g({2, 2});
    auto tw = canonical_twist(g, {{1, 1}}, 1);
    REQUIRE(tw.has_value());
    CHECK(tw->size() == 2);
    CHECK(g.generates({{1, 1}, (*tw)[0], (*tw)[1]}));
    CHECK_FALSE(canonical_twist(Group({2, 2, 2}), {}, 1).has_value());
  }
}
