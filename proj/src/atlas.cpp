#include "sandwich/atlas.hpp"

#include "sandwich/errors.hpp"
#include "sandwich/parallel.hpp"
#include "sandwich/reference.hpp"

#include <algorithm>
#include <map>

namespace sandwich {

std::vector<Group> abelian_groups_up_to(int bound) {
  std::vector<Group> out;
  // invariant factors n1 | n2 | ... | nk
  auto rec = [&](auto&& self, std::vector<int>& f, int prod) -> void {
    if (!f.empty()) out.emplace_back(f);
    const int start = f.empty() ? 2 : f.back();
    const int step = f.empty() ? 1 : f.back();
    for (int k = start; static_cast<long long>(prod) * k <= bound; k += step) {
      f.push_back(k);
      self(self, f, prod * k);
      f.pop_back();
    }
  };
  std::vector<int> f;
  rec(rec, f, 1);
  std::sort(out.begin(), out.end());
  return out;
}

ProfileKey canonical_profile(const EigenProfile& p) {
  const Group& g = p.group;
  ProfileKey best;
  bool first = true;
  for (const auto& phi : automorphisms(g)) {
    ProfileKey k;
    for (int i = 0; i < static_cast<int>(p.dims.size()); ++i)
      if (p.dims[i]) k.emplace_back(g.index(dual_apply(g, phi, g.element(i))), p.dims[i]);
    std::sort(k.begin(), k.end());
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

std::vector<int> canonical_support(const Group& g, const std::vector<Character>& support) {
  std::vector<int> best;
  bool first = true;
  for (const auto& phi : automorphisms(g)) {
    std::vector<int> k;
    for (const auto& c : support) k.push_back(g.index(dual_apply(g, phi, c)));
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

namespace {

void check_range(int genus, int a) {
  if (genus < 2 || genus > 5) fail(ErrorKind::InvalidInput, "atlas genus must be in 2..5");
  if (a < 0 || a > genus) fail(ErrorKind::InvalidInput, "quotient genus must be in 0..genus");
}

std::vector<AtlasRow> rows_for(const Group& g, int genus, int a) {
  CoverConstraints cons;
  cons.genus = genus;
  std::vector<AtlasRow> rows;
  std::map<ProfileKey, std::size_t> seen;
  for (auto& c : enumerate_covers(g, a, cons)) {
    EigenProfile p = eigen_profile(c);
    ProfileKey key = canonical_profile(p);
    if (seen.count(key)) continue;
    seen[key] = rows.size();
    rows.push_back({a, g, p, key, std::move(c), false, ""});
  }
  std::sort(rows.begin(), rows.end(), [](const AtlasRow& x, const AtlasRow& y) { return x.key < y.key; });
  return rows;
}

}  // namespace

std::vector<AtlasRow> enumerate_actions(int genus, int a, int workers) {
  check_range(genus, a);
  auto groups = abelian_groups_up_to(4 * genus + 4);
  auto parts = parallel_map(groups.size(), [&](std::size_t i) { return rows_for(groups[i], genus, a); }, workers);
  std::vector<AtlasRow> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<AtlasRow> atlas_table(int genus, int workers) {
  if (genus < 2 || genus > 5) fail(ErrorKind::InvalidInput, "atlas genus must be in 2..5");
  std::vector<AtlasRow> out;
  for (int a = genus; a >= 0; --a) {
    auto rows = enumerate_actions(genus, a, workers);
    for (auto& r : rows) out.push_back(std::move(r));
  }
  const ReferenceActionTable* ref = nullptr;
  for (const auto& t : action_tables())
    if (t.genus == genus) ref = &t;
  if (ref) {
    for (auto& r : out) {
      auto sup = canonical_support(r.group, r.profile.support());
      for (const auto& rr : ref->rows) {
        if (rr.a != r.quotient_genus || !(rr.group == r.group)) continue;
        if (canonical_support(rr.group, rr.support) == sup) {
          r.in_reference = true;
          r.reference = rr.table + " row " + std::to_string(rr.row);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<CoverData> all_actions(int genus, int a, const std::vector<Group>& groups, int workers) {
  auto parts = parallel_map(groups.size(), [&](std::size_t i) {
    CoverConstraints cons;
    cons.genus = genus;
    return enumerate_covers(groups[i], a, cons);
  }, workers);
  std::vector<CoverData> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

}  // namespace sandwich
