#pragma once

#include "sandwich/cover.hpp"

#include <algorithm>
#include <random>

namespace fixtures {

// Random connected cover over a base of genus b with Riemann-Hurwitz genus at
// least min_genus.
inline sandwich::CoverData random_cover(std::mt19937& rng, const sandwich::Group& g, int b, int min_genus) {
  using namespace sandwich;
  const auto els = g.nonzero_elements();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(els.size()) - 1);
  std::uniform_int_distribution<int> npts(0, 6);
  std::uniform_int_distribution<int> any(0, g.order() - 1);
  for (;;) {
    std::vector<Elem> pts;
    const int k = npts(rng);
    for (int i = 0; i < k; ++i) pts.push_back(els[pick(rng)]);
    Elem s = g.zero();
    for (const auto& p : pts) s = g.add(s, p);
    if (g.index(s) != 0) pts.push_back(g.neg(s));
    std::vector<Elem> twist;
    for (int i = 0; i < 2 * b; ++i) twist.push_back(g.element(any(rng)));
    std::vector<Elem> gens = pts;
    gens.insert(gens.end(), twist.begin(), twist.end());
    if (!g.generates(gens)) continue;
    if (b == 0 && pts.size() < 2) continue;
    std::vector<BranchEntry> br;
    for (const auto& p : pts) {
      auto it = std::find_if(br.begin(), br.end(), [&](const BranchEntry& e) { return e.elem == p; });
      if (it == br.end())
        br.push_back({p, 1});
      else
        ++it->mult;
    }
    CoverData c = make_cover(g, b, br, twist);
    if (riemann_hurwitz_genus(g, b, c.branch) < Rational(min_genus)) continue;
    return c;
  }
}

}  // namespace fixtures
