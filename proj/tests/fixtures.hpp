#pragma once

#include "sandwich/surface.hpp"

namespace fixtures {

using namespace sandwich;

inline CoverData cover0(const Group& g, std::vector<BranchEntry> br) { return make_cover(g, 0, std::move(br), {}); }

// genus-2 Z/2xZ/2 fibre with D branched on 2 + 2m points, m = 4
inline SandwichSurface z22_family1_m4() {
  Group g({2, 2});
  return make_sandwich(cover0(g, {{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 3}}), cover0(g, {{{0, 1}, 8}, {{1, 0}, 2}}));
}

// (Z/2)^3 free sandwich of genus 3 x genus 17, m = 4
inline SandwichSurface z222_family_i_m4() {
  Group g({2, 2, 2});
  return make_sandwich(cover0(g, {{{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}, {{1, 1, 1}, 2}}),
                       cover0(g, {{{0, 0, 1}, 8}, {{0, 1, 0}, 2}, {{1, 0, 0}, 2}}));
}

// Z/2xZ/8 fibre of genus 3 over an elliptic-base D of genus 33, m = 4
inline SandwichSurface z28_elliptic_m4() {
  Group g({2, 8});
  return make_sandwich(cover0(g, {{{0, 7}, 1}, {{1, 4}, 1}, {{1, 5}, 1}}),
                       make_cover(g, 1, {{{1, 0}, 8}}, {{0, 0}, {0, 1}}));
}

inline SandwichSurface hyperelliptic_pair() {
  Group g({2});
  return make_sandwich(cover0(g, {{{1}, 6}}), cover0(g, {{{1}, 6}}));
}

}  // namespace fixtures
