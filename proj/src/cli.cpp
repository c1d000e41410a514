#include "sandwich/cli.hpp"

#include "sandwich/atlas.hpp"
#include "sandwich/classifier.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/render.hpp"
#include "sandwich/specfile.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace sandwich {

namespace {

std::optional<int> parse_any_int(const std::string& s, const std::string& flag) {
  if (s == "any") return std::nullopt;
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidInput, flag + " expects an integer or 'any', got '" + s + "'");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos == t.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::InvalidInput, "--pg expects <lo>..<hi>, got '" + s + "'");
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = to_int(s);
    return {v, v};
  }
  int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
  if (lo > hi) fail(ErrorKind::InvalidInput, "--pg range is empty");
  return {lo, hi};
}

std::vector<Group> parse_groups(const std::vector<std::string>& specs) {
  std::vector<Group> out;
  for (const auto& s : specs) {
    if (s == "all") return {};
    out.push_back(parse_group(s));
  }
  return out;
}

void check_genus_f(int g, bool allow_high) {
  if (g == 2 || g == 3) return;
  if (allow_high && (g == 4 || g == 5)) return;
  fail(ErrorKind::InvalidInput, "--genus-f must be 2 or 3 (4 and 5 need --allow-high-genus)");
}

// every (g_F, group) pair named by a family table, classified over any a, b
std::vector<FamilyRow> classify_table_scope(const ReferenceFamilyTable& t, int pg_lo, int pg_hi) {
  std::map<int, std::set<Group>> scope;
  for (const auto& r : t.rows) scope[r.g_F].insert(r.group);
  std::vector<FamilyRow> rows;
  for (const auto& [gf, groups] : scope) {
    ClassifyRequest req;
    req.genus_f = gf;
    req.groups.assign(groups.begin(), groups.end());
    req.pg_lo = pg_lo;
    req.pg_hi = pg_hi;
    for (auto& r : classify(req)) rows.push_back(std::move(r));
  }
  return rows;
}

std::string summary_line(const std::vector<DiscrepancyReport>& ds, const std::string& id) {
  std::size_t missing = 0, extra = 0;
  for (const auto& d : ds) {
    missing += d.delta == "missing";
    extra += d.delta == "extra";
  }
  return std::to_string(ds.size()) + " discrepancies against " + id + " (" + std::to_string(missing) + " missing, " +
         std::to_string(extra) + " extra)\n";
}

}  // namespace

std::vector<DiscrepancyReport> compare_table(const std::string& id, int pg_lo, int pg_hi, int workers) {
  if (const auto* at = find_action_table(id)) return compare_atlas_with_reference(atlas_table(at->genus, workers), id);
  const auto* ft = find_family_table(id);
  if (!ft) {
    std::string known;
    for (const auto& k : reference_table_ids()) known += (known.empty() ? "" : ", ") + k;
    fail(ErrorKind::InvalidInput, "unknown table id '" + id + "' (known: " + known + ")");
  }
  return compare_with_reference(classify_table_scope(*ft, pg_lo, pg_hi), id);
}

int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical pencils on isotrivial sandwich surfaces"};
  app.require_subcommand(1);
  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  };

  auto* atlas = app.add_subcommand("atlas", "Abelian actions on curves of genus 2 or 3, by eigenspace profile");
  int atlas_genus = 0;
  std::string atlas_a = "any";
  atlas->add_option("--genus", atlas_genus, "genus of the curve")->required();
  atlas->add_option("--quotient-genus", atlas_a, "genus of the quotient, or 'any'");
  add_format(atlas);

  auto* covers = app.add_subcommand("covers", "All covers of one group with given genus and base genus");
  std::string cov_group;
  int cov_b = 0, cov_genus = 0;
  covers->add_option("--group", cov_group, "invariant factors, e.g. 2,8")->required();
  covers->add_option("--base-genus", cov_b, "genus of the base")->required();
  covers->add_option("--genus", cov_genus, "genus of the cover")->required();
  add_format(covers);

  auto* cls = app.add_subcommand("classify", "Search canonical-pencil sandwiches and fit families");
  int genus_f = 0;
  std::vector<std::string> groups{"all"};
  std::string base_a = "any", base_b = "any", pg = "3..8", cmp_id;
  bool allow_high = false;
  cls->add_option("--genus-f", genus_f, "genus of the fibre F")->required();
  cls->add_option("--group", groups, "invariant factors (repeatable) or 'all'");
  cls->add_option("--base-a", base_a, "genus of F/G, or 'any'");
  cls->add_option("--base-b", base_b, "genus of D/G, or 'any'");
  cls->add_option("--pg", pg, "p_g range <lo>..<hi>");
  cls->add_option("--compare", cmp_id, "compare the families against an embedded table");
  cls->add_flag("--allow-high-genus", allow_high, "permit genus 4 and 5 fibres (unverified)");
  add_format(cls);

  auto* inv = app.add_subcommand("invariants", "Invariants of one sandwich from a JSON spec file");
  std::string spec_path;
  bool flip = false;
  inv->add_option("spec", spec_path, "spec file")->required();
  inv->add_flag("--flip", flip, "use inverse stabiliser generators (cross-check)");
  add_format(inv);

  auto* cmp = app.add_subcommand("compare", "Compare engine output with an embedded table");
  std::string table_id, cmp_pg = "3..8";
  cmp->add_option("table", table_id, "table id")->required();
  cmp->add_option("--pg", cmp_pg, "p_g range for family tables");
  add_format(cmp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) {
        err << "error: " << e.what() << "\n" << sub->help();
        return 1;
      }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Format f = parse_format(format);
    if (atlas->parsed()) {
      if (atlas_genus != 2 && atlas_genus != 3) fail(ErrorKind::InvalidInput, "--genus must be 2 or 3");
      auto a = parse_any_int(atlas_a, "--quotient-genus");
      std::vector<AtlasRow> rows = atlas_table(atlas_genus);
      if (a) {
        if (*a < 0 || *a > atlas_genus) fail(ErrorKind::InvalidInput, "--quotient-genus out of range");
        rows.erase(std::remove_if(rows.begin(), rows.end(), [&](const AtlasRow& r) { return r.quotient_genus != *a; }),
                   rows.end());
      }
      out << render_atlas(rows, f);
    } else if (covers->parsed()) {
      Group g = parse_group(cov_group);
      if (cov_genus < 0 || cov_b < 0) fail(ErrorKind::InvalidInput, "genera must be non-negative");
      CoverConstraints cons;
      cons.genus = cov_genus;
      out << render_covers(enumerate_covers(g, cov_b, cons), f);
    } else if (cls->parsed()) {
      check_genus_f(genus_f, allow_high);
      ClassifyRequest req;
      req.genus_f = genus_f;
      req.groups = parse_groups(groups);
      req.base_a = parse_any_int(base_a, "--base-a");
      req.base_b = parse_any_int(base_b, "--base-b");
      std::tie(req.pg_lo, req.pg_hi) = parse_range(pg);
      if (!cmp_id.empty() && !find_family_table(cmp_id) && !find_action_table(cmp_id))
        fail(ErrorKind::InvalidInput, "unknown table id '" + cmp_id + "'");
      auto rows = classify(req);
      if (cmp_id.empty()) {
        out << render_families(rows, f);
      } else {
        auto ds = compare_with_reference(rows, cmp_id, &req);
        out << render_discrepancies(ds, f);
        if (f == Format::Table) out << summary_line(ds, cmp_id);
      }
    } else if (inv->parsed()) {
      auto s = read_spec_file(spec_path);
      auto r = invariants(s, flip);
      out << render_invariants(r, f);
      for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    } else if (cmp->parsed()) {
      auto [lo, hi] = parse_range(cmp_pg);
      auto ds = compare_table(table_id, lo, hi, 0);
      out << render_discrepancies(ds, f);
      if (f == Format::Table) out << summary_line(ds, table_id);
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sandwich
