#pragma once

#include "sandwich/cover.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sandwich {

struct SandwichSurface {
  CoverData F;  // over A, genus a
  CoverData D;  // over B, genus b
  const Group& group() const { return F.group; }
};

SandwichSurface make_sandwich(CoverData F, CoverData D);

int geometric_genus(const SandwichSurface& s);
int irregularity(const SandwichSurface& s);

// Throws NotApplicable when p_g < 2.
std::optional<Character> canonical_character(const SandwichSurface& s);

struct SingularityRecord {
  int n = 0;
  int q = 0;
  long long count = 0;     // singular points of X
  long long z_points = 0;  // points of Z above them
  bool operator==(const SingularityRecord& o) const {
    return n == o.n && q == o.q && count == o.count && z_points == o.z_points;
  }
};

struct SingularLocus {
  std::vector<SingularityRecord> records;  // sorted by (n, q)
  long long t_z = 0;
};

// flip = use the inverse generator of every stabiliser intersection
SingularLocus singular_locus(const SandwichSurface& s, bool flip = false);

std::vector<int> hj_expansion(int n, int q);
Rational hj_evaluate(const std::vector<int>& bs);

struct Discrepancies {
  std::vector<Rational> a;
  Rational k2_correction;
};
Discrepancies discrepancies(const std::vector<int>& bs);

struct InvariantReport {
  long long p_g = 0;
  long long q = 0;
  long long chi = 0;
  long long euler_e = 0;
  long long K2 = 0;
  long long t_z = 0;
  std::vector<SingularityRecord> sing;
  std::optional<Character> canonical_character;
  int g_F = 0;
  int g_D = 0;
  std::vector<std::string> warnings;
};

// Both K^2 routes, integrality and (all-node case) the shortcut formulas are
// checked; any disagreement throws InternalConsistency.
InvariantReport invariants(const SandwichSurface& s, bool flip = false);

}  // namespace sandwich
