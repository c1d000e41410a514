#include "sandwich/cover.hpp"

#include "sandwich/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sandwich {

int CoverData::branch_points() const {
  int n = 0;
  for (const auto& b : branch) n += b.mult;
  return n;
}

std::vector<Elem> CoverData::branch_elements() const {
  std::vector<Elem> out;
  for (const auto& b : branch) out.push_back(b.elem);
  return out;
}

namespace {

std::vector<BranchEntry> normalize_branch(const Group& g, std::vector<BranchEntry> branch) {
  std::map<int, int> merged;
  for (const auto& b : branch) {
    if (!g.valid(b.elem))
      fail(ErrorKind::InvalidInput, "branch element " + format_tuple(b.elem) + " not in " + g.name());
    if (b.mult < 0) fail(ErrorKind::InvalidInput, "negative branch multiplicity");
    if (b.mult == 0) continue;
    int idx = g.index(b.elem);
    if (idx == 0) fail(ErrorKind::InvalidInput, "identity is not a branch element");
    merged[idx] += b.mult;
  }
  std::vector<BranchEntry> out;
  for (auto [idx, m] : merged) out.push_back({g.element(idx), m});
  return out;
}

}  // namespace

CoverData make_cover(const Group& g, int base_genus, std::vector<BranchEntry> branch,
                     std::vector<Elem> twist) {
  if (base_genus < 0) fail(ErrorKind::InvalidInput, "negative base genus");
  CoverData c{g, base_genus, normalize_branch(g, std::move(branch)), std::move(twist)};
  if (static_cast<int>(c.twist.size()) != 2 * base_genus)
    fail(ErrorKind::InvalidInput, "twist must list 2b = " + std::to_string(2 * base_genus) + " elements");
  for (const auto& t : c.twist)
    if (!g.valid(t)) fail(ErrorKind::InvalidInput, "twist element " + format_tuple(t) + " not in " + g.name());

  Elem s = g.zero();
  for (const auto& b : c.branch) s = g.add(s, g.scale(b.mult, b.elem));
  if (g.index(s) != 0)
    fail(ErrorKind::InvalidMonodromy, "branch monodromy sums to " + format_tuple(s) + ", not 0");

  std::vector<Elem> gens = c.branch_elements();
  gens.insert(gens.end(), c.twist.begin(), c.twist.end());
  if (!g.generates(gens)) fail(ErrorKind::DisconnectedCover, "branch and twist do not generate " + g.name());

  if (base_genus == 0 && !g.trivial() && c.branch_points() < 2)
    fail(ErrorKind::InvalidMonodromy, "a cover of a rational curve needs at least two branch points");
  return c;
}

std::optional<std::vector<Elem>> canonical_twist(const Group& g, const std::vector<Elem>& branch_elems,
                                                 int base_genus) {
  const int slots = 2 * base_genus;
  std::vector<Elem> chosen;
  std::vector<Elem> best;
  bool found = false;
  auto rec = [&](auto&& self, int i) -> void {
    std::vector<Elem> gens = branch_elems;
    gens.insert(gens.end(), chosen.begin(), chosen.end());
    long long have = static_cast<long long>(g.span(gens).size());
    if (i == slots) {
      if (have == g.order()) {
        best = chosen;
        found = true;
      }
      return;
    }
    long long reach = have;
    for (int r = i; r < slots && reach < g.order(); ++r) reach *= g.exponent();
    if (reach < g.order()) return;
    for (int idx = 0; idx < g.order() && !found; ++idx) {
      chosen.push_back(g.element(idx));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  if (!found) return std::nullopt;
  return best;
}

CoverData make_cover_auto_twist(const Group& g, int base_genus, std::vector<BranchEntry> branch) {
  auto norm = normalize_branch(g, std::move(branch));
  std::vector<Elem> elems;
  for (const auto& b : norm) elems.push_back(b.elem);
  auto tw = canonical_twist(g, elems, base_genus);
  if (!tw) fail(ErrorKind::DisconnectedCover, "no twist makes the cover connected");
  return make_cover(g, base_genus, norm, *tw);
}

int bundle_degree(const CoverData& c, const Character& chi) {
  const Group& g = c.group;
  if (!g.valid(chi)) fail(ErrorKind::InvalidInput, "character out of range");
  Rational d = 0;
  for (const auto& b : c.branch)
    d += Rational(static_cast<std::int64_t>(b.mult) * g.restriction_exponent(chi, b.elem),
                  g.element_order(b.elem));
  if (d.denominator() != 1)
    fail(ErrorKind::InternalConsistency, "non-integral bundle degree for " + format_tuple(chi));
  return static_cast<int>(d.numerator());
}

int eigen_dim(const CoverData& c, const Character& chi) {
  const Group& g = c.group;
  if (g.index(chi) == 0) return c.base_genus;
  int l = bundle_degree(c, g.neg(chi));
  return l >= 1 ? l + c.base_genus - 1 : c.base_genus - 1;
}

int EigenProfile::total() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

std::vector<Character> EigenProfile::support() const {
  std::vector<Character> out;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (dims[i]) out.push_back(group.element(i));
  return out;
}

EigenProfile eigen_profile(const CoverData& c) {
  EigenProfile p{c.group, {}};
  for (const auto& chi : c.group.elements()) p.dims.push_back(eigen_dim(c, chi));
  return p;
}

Rational riemann_hurwitz_genus(const Group& g, int base_genus, const std::vector<BranchEntry>& branch) {
  Rational s = 0;
  for (const auto& b : branch) s += Rational(b.mult) * (Rational(1) - Rational(1, g.element_order(b.elem)));
  return Rational(1) + Rational(g.order()) * (base_genus - 1) + Rational(g.order(), 2) * s;
}

int genus(const CoverData& c) {
  int cw = eigen_profile(c).total();
  Rational rh = riemann_hurwitz_genus(c.group, c.base_genus, c.branch);
  if (rh != Rational(cw))
    fail(ErrorKind::InternalConsistency, "eigenspace genus " + std::to_string(cw) +
                                             " disagrees with Riemann-Hurwitz");
  return cw;
}

BranchKey branch_key(const Group& g, const std::vector<BranchEntry>& branch) {
  BranchKey k;
  for (const auto& b : branch) k.emplace_back(g.index(b.elem), b.mult);
  std::sort(k.begin(), k.end());
  return k;
}

BranchKey branch_key(const Group& g, const std::vector<BranchEntry>& branch, const Automorphism& phi) {
  BranchKey k;
  for (const auto& b : branch) k.emplace_back(phi.perm[g.index(b.elem)], b.mult);
  std::sort(k.begin(), k.end());
  return k;
}

BranchKey canonical_branch_key(const Group& g, const std::vector<BranchEntry>& branch) {
  BranchKey best;
  bool first = true;
  for (const auto& phi : automorphisms(g)) {
    BranchKey k = branch_key(g, branch, phi);
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

namespace {

struct DegreeCap {
  int char_index;  // L_chi is capped
  int cap;
};

}  // namespace

std::vector<CoverData> enumerate_covers(const Group& g, int b, const CoverConstraints& cons) {
  if (b < 0) fail(ErrorKind::InvalidInput, "negative base genus");
  const int E = g.exponent();
  const auto elems = g.nonzero_elements();
  const int ne = static_cast<int>(elems.size());

  // weights of each element in units of 1/E
  std::vector<int> rh_w(ne);
  for (int i = 0; i < ne; ++i) {
    int o = g.element_order(elems[i]);
    rh_w[i] = E / o * (o - 1);
  }
  std::optional<long long> rh_target;
  if (cons.genus) {
    // sum m (o-1)/o = (2g-2)/|G| - (2b-2)
    long long num = static_cast<long long>(2 * *cons.genus - 2) * E;
    if (num % g.order() != 0) return {};
    long long t = num / g.order() - static_cast<long long>(2 * b - 2) * E;
    if (t < 0) return {};
    rh_target = t;
  }

  std::vector<DegreeCap> caps;
  for (const auto& [chi, d] : cons.dims) {
    if (!g.valid(chi)) fail(ErrorKind::InvalidInput, "constraint character out of range");
    if (g.index(chi) == 0) {
      if (d != b) return {};
      continue;
    }
    int cap;
    if (b == 0) cap = d >= 1 ? d + 1 : 1;
    else if (d >= b) cap = d - b + 1;
    else if (d == b - 1) cap = 0;
    else return {};
    caps.push_back({g.index(g.neg(chi)), cap});
  }
  // exponents r(chi, h) per cap and element
  std::vector<std::vector<int>> rexp(caps.size(), std::vector<int>(ne));
  for (std::size_t c = 0; c < caps.size(); ++c)
    for (int i = 0; i < ne; ++i)
      rexp[c][i] = g.restriction_exponent(g.element(caps[c].char_index), elems[i]) * (E / g.element_order(elems[i]));

  if (!rh_target && !cons.max_branch_points) {
    for (int i = 0; i < ne; ++i) {
      bool bounded = false;
      for (std::size_t c = 0; c < caps.size(); ++c) bounded |= rexp[c][i] > 0;
      if (!bounded) fail(ErrorKind::Capability, "cover enumeration constraints leave the search unbounded");
    }
  }

  std::vector<CoverData> out;
  std::set<BranchKey> seen;
  std::vector<int> mult(ne, 0);
  std::vector<long long> deg(caps.size(), 0);
  long long rh_acc = 0;
  int points = 0;

  auto leaf = [&]() {
    if (rh_target && rh_acc != *rh_target) return;
    std::vector<BranchEntry> br;
    Elem s = g.zero();
    for (int i = 0; i < ne; ++i)
      if (mult[i]) {
        br.push_back({elems[i], mult[i]});
        s = g.add(s, g.scale(mult[i], elems[i]));
      }
    if (g.index(s) != 0) return;
    if (b == 0 && !g.trivial() && points < 2) return;
    std::vector<Elem> be;
    for (const auto& e : br) be.push_back(e.elem);
    auto tw = canonical_twist(g, be, b);
    if (!tw) return;
    if (cons.up_to_automorphism) {
      auto key = canonical_branch_key(g, br);
      if (!seen.insert(key).second) return;
    }
    CoverData c = make_cover(g, b, br, *tw);
    for (const auto& [chi, d] : cons.dims)
      if (eigen_dim(c, chi) != d) return;
    if (cons.genus && genus(c) != *cons.genus)
      fail(ErrorKind::InternalConsistency, "enumerated cover has the wrong genus");
    out.push_back(std::move(c));
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == ne) {
      leaf();
      return;
    }
    int m = 0;
    for (;;) {
      mult[i] = m;
      self(self, i + 1);
      ++m;
      rh_acc += rh_w[i];
      ++points;
      for (std::size_t c = 0; c < caps.size(); ++c) deg[c] += rexp[c][i];
      bool over = (rh_target && rh_acc > *rh_target) ||
                  (cons.max_branch_points && points > *cons.max_branch_points);
      for (std::size_t c = 0; c < caps.size() && !over; ++c)
        if (deg[c] > static_cast<long long>(caps[c].cap) * E) over = true;
      if (over) break;
    }
    rh_acc -= static_cast<long long>(rh_w[i]) * m;
    points -= m;
    for (std::size_t c = 0; c < caps.size(); ++c) deg[c] -= static_cast<long long>(rexp[c][i]) * m;
    mult[i] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace sandwich
