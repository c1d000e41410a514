#pragma once

#include "sandwich/cover.hpp"

#include <string>
#include <vector>

namespace sandwich {

std::vector<Group> abelian_groups_up_to(int order_bound);

// Canonical form of a profile under Aut(G): sorted (character index, dim)
// pairs over the nonzero dims, minimised over the dual action.
using ProfileKey = std::vector<std::pair<int, int>>;
ProfileKey canonical_profile(const EigenProfile& p);
// Same for a bare support set (dims ignored).
std::vector<int> canonical_support(const Group& g, const std::vector<Character>& support);

struct AtlasRow {
  int quotient_genus = 0;
  Group group;
  EigenProfile profile;  // of the witness; its canonical form is `key`
  ProfileKey key;
  CoverData witness;
  bool in_reference = false;
  std::string reference;  // "tabellauno row 24" when matched
};

std::vector<AtlasRow> enumerate_actions(int genus, int quotient_genus, int workers = 0);

// All quotient genera, rows flagged against the embedded action table.
std::vector<AtlasRow> atlas_table(int genus, int workers = 0);

// Every cover of the given genus and base genus over any group, up to Aut
// (not only one per profile); the classifier needs the branch data.
std::vector<CoverData> all_actions(int genus, int quotient_genus, const std::vector<Group>& groups,
                                   int workers = 0);

}  // namespace sandwich
