#pragma once

#include "sandwich/group.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sandwich {

struct BranchEntry {
  Elem elem;
  int mult = 0;
  bool operator==(const BranchEntry& o) const { return elem == o.elem && mult == o.mult; }
};

// Kept sorted by element index with distinct elements; see make_cover.
struct CoverData {
  Group group;
  int base_genus = 0;
  std::vector<BranchEntry> branch;
  std::vector<Elem> twist;

  int branch_points() const;
  std::vector<Elem> branch_elements() const;
};

CoverData make_cover(const Group& g, int base_genus, std::vector<BranchEntry> branch,
                     std::vector<Elem> twist);

// Fills the twist with canonical_twist when it is empty.
CoverData make_cover_auto_twist(const Group& g, int base_genus, std::vector<BranchEntry> branch);

// Lexicographically smallest 2b-tuple of elements completing the branch
// elements to a generating set, if any.
std::optional<std::vector<Elem>> canonical_twist(const Group& g, const std::vector<Elem>& branch_elems,
                                                 int base_genus);

int bundle_degree(const CoverData& c, const Character& chi);
int eigen_dim(const CoverData& c, const Character& chi);

struct EigenProfile {
  Group group;
  std::vector<int> dims;  // indexed by character index
  int dim(const Character& chi) const { return dims[group.index(chi)]; }
  int total() const;
  std::vector<Character> support() const;
};

EigenProfile eigen_profile(const CoverData& c);

// Riemann-Hurwitz value as an exact rational.
Rational riemann_hurwitz_genus(const Group& g, int base_genus, const std::vector<BranchEntry>& branch);

// Sum of eigenspace dimensions, checked against Riemann-Hurwitz.
int genus(const CoverData& c);

struct CoverConstraints {
  std::optional<int> genus;
  std::optional<int> max_branch_points;
  std::vector<std::pair<Character, int>> dims;
  bool up_to_automorphism = true;
};

std::vector<CoverData> enumerate_covers(const Group& g, int base_genus, const CoverConstraints& cons);

// Canonical key of the branch multiset under Aut(G): sorted (index, mult) pairs.
using BranchKey = std::vector<std::pair<int, int>>;
BranchKey branch_key(const Group& g, const std::vector<BranchEntry>& branch);
BranchKey branch_key(const Group& g, const std::vector<BranchEntry>& branch, const Automorphism& phi);
BranchKey canonical_branch_key(const Group& g, const std::vector<BranchEntry>& branch);

}  // namespace sandwich
