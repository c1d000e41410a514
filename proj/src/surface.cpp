#include "sandwich/surface.hpp"

#include "sandwich/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace sandwich {

SandwichSurface make_sandwich(CoverData F, CoverData D) {
  if (!(F.group == D.group))
    fail(ErrorKind::GroupMismatch, "covers use different groups: " + F.group.name() + " vs " + D.group.name());
  if (genus(F) < 2) fail(ErrorKind::InvalidInput, "g(F) must be at least 2");
  if (genus(D) < 2) fail(ErrorKind::InvalidInput, "g(D) must be at least 2");
  return {std::move(F), std::move(D)};
}

int geometric_genus(const SandwichSurface& s) {
  const Group& g = s.group();
  auto v1 = eigen_profile(s.F);
  auto v2 = eigen_profile(s.D);
  int pg = 0;
  for (int i = 0; i < g.order(); ++i) pg += v1.dims[i] * v2.dims[g.index(g.neg(g.element(i)))];
  return pg;
}

int irregularity(const SandwichSurface& s) { return s.F.base_genus + s.D.base_genus; }

std::optional<Character> canonical_character(const SandwichSurface& s) {
  const Group& g = s.group();
  auto v1 = eigen_profile(s.F);
  auto v2 = eigen_profile(s.D);
  int pg = 0;
  int nonzero = 0;
  int found = -1;
  for (int i = 0; i < g.order(); ++i) {
    int p = v1.dims[i] * v2.dims[g.index(g.neg(g.element(i)))];
    pg += p;
    if (p) {
      ++nonzero;
      found = i;
    }
  }
  if (pg < 2) fail(ErrorKind::NotApplicable, "canonical character needs p_g >= 2");
  if (nonzero != 1 || v1.dims[found] != 1) return std::nullopt;
  return g.element(found);
}

namespace {

long long mod_inverse(long long a, long long n) {
  long long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr) {
    long long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) fail(ErrorKind::InternalConsistency, "rotation exponent not invertible");
  return (t % n + n) % n;
}

}  // namespace

SingularLocus singular_locus(const SandwichSurface& s, bool flip) {
  const Group& g = s.group();
  const long long G = g.order();
  std::map<std::pair<int, int>, SingularityRecord> recs;
  SingularLocus out;
  for (const auto& b1 : s.F.branch) {
    const int o1 = g.element_order(b1.elem);
    const auto sub1 = g.span({b1.elem});
    for (const auto& b2 : s.D.branch) {
      const int o2 = g.element_order(b2.elem);
      const int n = std::gcd(o1, o2) == 1 ? 1 : [&] {
        auto sub2 = g.span({b2.elem});
        int c = 0;
        for (const auto& x : sub1)
          if (std::find(sub2.begin(), sub2.end(), x) != sub2.end()) ++c;
        return c;
      }();
      if (n == 1) continue;
      // gen = k1 h1 = k2 h2 generates the intersection
      long long k1 = o1 / n;
      if (flip) k1 = o1 - k1;
      Elem gen = g.scale(k1, b1.elem);
      long long k2 = -1;
      for (int k = 0; k < o2; ++k)
        if (g.scale(k, b2.elem) == gen) {
          k2 = k;
          break;
        }
      if (k2 < 0) fail(ErrorKind::InternalConsistency, "stabiliser intersection generator not found");
      const long long alpha = k1 * n / o1;
      const long long beta = k2 * n / o2;
      long long q = beta * mod_inverse(alpha, n) % n;
      q = std::min(q, mod_inverse(q, n));
      const long long z = static_cast<long long>(b1.mult) * b2.mult * (G / o1) * (G / o2);
      auto& r = recs[{n, static_cast<int>(q)}];
      r.n = n;
      r.q = static_cast<int>(q);
      r.z_points += z;
      r.count += z * n / G;
      out.t_z += z;
    }
  }
  for (auto& [k, r] : recs) out.records.push_back(r);
  return out;
}

std::vector<int> hj_expansion(int n, int q) {
  if (n < 2 || q < 1 || q >= n) fail(ErrorKind::InvalidInput, "hj_expansion needs n >= 2 and 1 <= q < n");
  if (std::gcd(n, q) != 1) fail(ErrorKind::InvalidInput, "hj_expansion needs gcd(n, q) = 1");
  std::vector<int> bs;
  while (q) {
    int b = (n + q - 1) / q;
    bs.push_back(b);
    int r = b * q - n;
    n = q;
    q = r;
  }
  return bs;
}

Rational hj_evaluate(const std::vector<int>& bs) {
  Rational v = bs.back();
  for (std::size_t i = bs.size() - 1; i-- > 0;) v = Rational(bs[i]) - Rational(1) / v;
  return v;
}

Discrepancies discrepancies(const std::vector<int>& bs) {
  const std::size_t l = bs.size();
  for (int b : bs)
    if (b < 2) fail(ErrorKind::InvalidInput, "self-intersections must be <= -2");
  // a_{i-1} - b_i a_i + a_{i+1} = b_i - 2, Thomas algorithm
  std::vector<Rational> c(l), d(l), a(l);
  for (std::size_t i = 0; i < l; ++i) {
    Rational diag = Rational(-bs[i]) - (i ? c[i - 1] : Rational(0));
    c[i] = Rational(1) / diag;
    d[i] = (Rational(bs[i] - 2) - (i ? d[i - 1] : Rational(0))) / diag;
  }
  for (std::size_t i = l; i-- > 0;) a[i] = d[i] - (i + 1 < l ? c[i] * a[i + 1] : Rational(0));
  Discrepancies out{a, 0};
  for (std::size_t i = 0; i < l; ++i) out.k2_correction += a[i] * (bs[i] - 2);
  return out;
}

InvariantReport invariants(const SandwichSurface& s, bool flip) {
  const Group& g = s.group();
  const long long G = g.order();
  InvariantReport r;
  r.g_F = genus(s.F);
  r.g_D = genus(s.D);
  r.p_g = geometric_genus(s);
  r.q = irregularity(s);
  r.chi = 1 - r.q + r.p_g;

  SingularLocus loc = singular_locus(s, flip);
  r.t_z = loc.t_z;
  r.sing = loc.records;

  const long long eZ = static_cast<long long>(2 - 2 * r.g_F) * (2 - 2 * r.g_D);
  Rational e = Rational(eZ - loc.t_z, G);
  Rational k2 = Rational(2LL * (2 * r.g_F - 2) * (2 * r.g_D - 2), G);
  bool all_nodes = true;
  for (const auto& rec : loc.records) {
    auto bs = hj_expansion(rec.n, rec.q);
    e += Rational(rec.count * static_cast<long long>(bs.size() + 1));
    k2 += Rational(rec.count) * discrepancies(bs).k2_correction;
    all_nodes &= rec.n == 2;
  }
  if (e.denominator() != 1) fail(ErrorKind::InternalConsistency, "non-integral Euler number");
  r.euler_e = e.numerator();
  const Rational k2_noether = Rational(12 * r.chi) - e;
  if (k2 != k2_noether)
    fail(ErrorKind::InternalConsistency, "K^2 routes disagree: Noether gives " + std::to_string(k2_noether.numerator()) +
                                             "/" + std::to_string(k2_noether.denominator()) + ", adjunction gives " +
                                             std::to_string(k2.numerator()) + "/" + std::to_string(k2.denominator()));
  if (k2.denominator() != 1) fail(ErrorKind::InternalConsistency, "non-integral K^2");
  r.K2 = k2.numerator();

  if (all_nodes) {
    const Rational kz = Rational(2LL * (2 * r.g_F - 2) * (2 * r.g_D - 2), G);
    const Rational chi = (Rational(static_cast<long long>(r.g_F - 1) * (r.g_D - 1)) + Rational(loc.t_z, 4)) / G;
    if (kz != Rational(r.K2) || chi != Rational(r.chi))
      fail(ErrorKind::InternalConsistency, "node shortcut formulas disagree with the general computation");
  }

  if (r.p_g >= 2) r.canonical_character = canonical_character(s);
  if (r.canonical_character) {
    if (2 * r.euler_e < r.K2) r.warnings.push_back("2e < K^2");
    if (9 * r.chi < r.K2) r.warnings.push_back("9chi < K^2");
    if (r.p_g >= 11) {
      const int a = s.F.base_genus, b = s.D.base_genus;
      bool ok = r.g_F >= 2 && r.g_F <= 5 && ((a <= 2 && b == 0) || (a == 0 && b == 1));
      if (!ok) fail(ErrorKind::InternalConsistency, "canonical pencil with p_g >= 11 outside the admissible genus pattern");
    }
  }
  return r;
}

}  // namespace sandwich
