#include "sandwich/render.hpp"

#include "sandwich/errors.hpp"
#include "sandwich/specfile.hpp"

#include <algorithm>
#include <sstream>

namespace sandwich {

namespace {

constexpr long long kTableShift = 1;  // m = p_g + 1

std::string rat_json(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  fail(ErrorKind::InvalidInput, "unknown format '" + s + "' (table, csv or json)");
}

std::string to_aligned(const TextTable& t) {
  std::vector<std::size_t> w(t.headers.size(), 0);
  auto width = [](const std::string& s) {
    // count code points so K² lines up
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  for (std::size_t i = 0; i < t.headers.size(); ++i) w[i] = width(t.headers[i]);
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(w[i] - width(cells[i]), ' ');
    }
    out << s << "\n";
  };
  line(t.headers);
  std::vector<std::string> rule;
  for (auto x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::string csv_field(const std::string& s) {
  bool quote = s.find_first_of(",\"\r\n") != std::string::npos ||
               (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!quote) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string to_csv(const TextTable& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

std::string format_profile(const EigenProfile& p) {
  std::string s;
  for (int i = 0; i < static_cast<int>(p.dims.size()); ++i) {
    if (!p.dims[i]) continue;
    if (!s.empty()) s += "+";
    if (p.dims[i] > 1) s += std::to_string(p.dims[i]);
    s += format_tuple(p.group.element(i));
  }
  return s.empty() ? "0" : s;
}

std::string format_branch(const std::vector<BranchEntry>& branch) {
  std::string s;
  for (const auto& b : branch) {
    if (!s.empty()) s += " ";
    s += format_tuple(b.elem);
    if (b.mult > 1) s += "^" + std::to_string(b.mult);
  }
  return s.empty() ? "-" : s;
}

std::string format_sing(const std::vector<SingularityRecord>& recs) {
  std::string s;
  for (const auto& r : recs) {
    if (!s.empty()) s += " ";
    s += std::to_string(r.count) + "x1/" + std::to_string(r.n) + "(1," + std::to_string(r.q) + ")";
  }
  return s.empty() ? "none" : s;
}

namespace {

std::string sing_types(const std::vector<std::pair<int, int>>& t) {
  std::string s;
  for (const auto& [n, q] : t) {
    if (!s.empty()) s += " ";
    s += "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")";
  }
  return s.empty() ? "none" : s;
}

nlohmann::json sing_json(const std::vector<SingularityRecord>& recs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : recs) a.push_back({{"n", r.n}, {"q", r.q}, {"count", r.count}, {"z_points", r.z_points}});
  return a;
}

std::string kind_of(const FamilyRow& r) {
  if (r.unbounded()) return "unbounded";
  if (r.fitted) return "fitted";
  return "sporadic";
}

// unfitted rows list their values point by point
std::string per_point(const FamilyRow& r, long long (*get)(const FamilyPoint&)) {
  std::string s;
  for (const auto& p : r.points) {
    if (!s.empty()) s += " ";
    s += std::to_string(get(p)) + "@" + std::to_string(p.p_g);
  }
  return s;
}

}  // namespace

nlohmann::json invariants_json(const InvariantReport& r) {
  nlohmann::json j;
  j["p_g"] = r.p_g;
  j["q"] = r.q;
  j["chi"] = r.chi;
  j["euler_e"] = r.euler_e;
  j["K2"] = r.K2;
  j["t_z"] = r.t_z;
  j["sing"] = sing_json(r.sing);
  j["canonical_character"] = r.canonical_character ? nlohmann::json(*r.canonical_character) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json family_json(const FamilyRow& row) {
  nlohmann::json j;
  j["group"] = row.group.factors();
  j["a"] = row.a;
  j["b"] = row.b;
  j["g_F"] = row.g_F;
  j["kind"] = kind_of(row);
  j["fitted"] = row.fitted;
  if (row.fitted) {
    j["forms"] = {{"parameter", "m = p_g + 1"},
                  {"p_g", format_linear({1, 0}, kTableShift)},
                  {"g_D", format_linear(row.g_D, kTableShift)},
                  {"K2", format_linear(row.K2, kTableShift)},
                  {"t_z", format_linear(row.t_z, kTableShift)}};
    auto lin = [](const LinearForm& f) {
      return nlohmann::json{{"slope", rat_json(f.slope)}, {"intercept", rat_json(f.intercept)}};
    };
    j["in_p_g"] = {{"g_D", lin(row.g_D)}, {"K2", lin(row.K2)}, {"t_z", lin(row.t_z)}};
  }
  nlohmann::json st = nlohmann::json::array();
  for (const auto& [n, q] : row.sing_types) st.push_back({n, q});
  j["sing_types"] = st;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : row.points) {
    const Solution* w = nullptr;
    for (const auto& r : row.realizations)
      for (const auto& m : r.members)
        if (!w && m.report.p_g == p.p_g) w = &m;
    nlohmann::json pj{{"p_g", p.p_g}, {"g_D", p.g_D}, {"K2", p.K2}, {"t_z", p.t_z},
                      {"chi", p.chi}, {"euler_e", p.euler_e}, {"sing", sing_json(p.sing)}};
    if (w) {
      pj["canonical_character"] = w->chi0;
      pj["witness"] = sandwich_to_json(w->F, w->D);
    }
    pts.push_back(pj);
  }
  j["points"] = pts;
  j["realizations"] = static_cast<int>(row.realizations.size());
  return j;
}

nlohmann::json discrepancy_json(const DiscrepancyReport& d) {
  return {{"table", d.table}, {"row", d.row},           {"field", d.field},
          {"paper", d.paper}, {"computed", d.computed}, {"delta", d.delta}};
}

std::string render_families(const std::vector<FamilyRow>& rows, Format f) {
  if (f == Format::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rows) a.push_back(family_json(r));
    return dump(a);
  }
  TextTable t{{"G", "g(A)", "g(B)", "g(F)", "g(D)", "K²", "t", "p_g", "sing", "kind"}, {}};
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.group.name(), std::to_string(r.a), std::to_string(r.b), std::to_string(r.g_F)};
    if (r.fitted) {
      cells.push_back(format_linear(r.g_D, kTableShift));
      cells.push_back(format_linear(r.K2, kTableShift));
      cells.push_back(format_linear(r.t_z, kTableShift));
      cells.push_back(format_linear({1, 0}, kTableShift));
    } else {
      cells.push_back(per_point(r, [](const FamilyPoint& p) { return static_cast<long long>(p.g_D); }));
      cells.push_back(per_point(r, [](const FamilyPoint& p) { return p.K2; }));
      cells.push_back(per_point(r, [](const FamilyPoint& p) { return p.t_z; }));
      cells.push_back(per_point(r, [](const FamilyPoint& p) { return static_cast<long long>(p.p_g); }));
    }
    cells.push_back(sing_types(r.sing_types));
    cells.push_back(kind_of(r));
    t.rows.push_back(std::move(cells));
  }
  return f == Format::Csv ? to_csv(t) : to_aligned(t);
}

std::string render_atlas(const std::vector<AtlasRow>& rows, Format f) {
  if (f == Format::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json prof = nlohmann::json::array();
      for (const auto& c : r.profile.support()) prof.push_back({{"character", c}, {"dim", r.profile.dim(c)}});
      a.push_back({{"quotient_genus", r.quotient_genus},
                   {"group", r.group.factors()},
                   {"profile", prof},
                   {"witness", {{"group", r.group.factors()}, {"cover", cover_to_json(r.witness)}}},
                   {"reference", r.in_reference ? nlohmann::json(r.reference) : nlohmann::json(nullptr)}});
    }
    return dump(a);
  }
  TextTable t{{"g(A)", "G", "eigenspaces", "branch", "table"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.quotient_genus), r.group.name(), format_profile(r.profile),
                      format_branch(r.witness.branch), r.in_reference ? r.reference : "extra"});
  return f == Format::Csv ? to_csv(t) : to_aligned(t);
}

std::string render_covers(const std::vector<CoverData>& covers, Format f) {
  if (f == Format::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : covers) {
      nlohmann::json j = cover_to_json(c);
      j["group"] = c.group.factors();
      j["genus"] = genus(c);
      a.push_back(j);
    }
    return dump(a);
  }
  TextTable t{{"G", "b", "g", "branch", "twist", "eigenspaces"}, {}};
  for (const auto& c : covers) {
    std::string tw;
    for (const auto& e : c.twist) tw += (tw.empty() ? "" : " ") + format_tuple(e);
    t.rows.push_back({c.group.name(), std::to_string(c.base_genus), std::to_string(genus(c)), format_branch(c.branch),
                      tw.empty() ? "-" : tw, format_profile(eigen_profile(c))});
  }
  return f == Format::Csv ? to_csv(t) : to_aligned(t);
}

std::string render_discrepancies(const std::vector<DiscrepancyReport>& ds, Format f) {
  if (f == Format::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& d : ds) a.push_back(discrepancy_json(d));
    return dump(a);
  }
  TextTable t{{"table", "row", "field", "paper", "computed", "delta"}, {}};
  for (const auto& d : ds)
    t.rows.push_back({d.table, d.row ? std::to_string(d.row) : "-", d.field, d.paper, d.computed, d.delta});
  return f == Format::Csv ? to_csv(t) : to_aligned(t);
}

std::string render_invariants(const InvariantReport& r, Format f) {
  if (f == Format::Json) return dump(invariants_json(r));
  TextTable t{{"p_g", "q", "chi", "euler_e", "K2", "t_z", "sing", "canonical_character"}, {}};
  t.rows.push_back({std::to_string(r.p_g), std::to_string(r.q), std::to_string(r.chi), std::to_string(r.euler_e),
                    std::to_string(r.K2), std::to_string(r.t_z), format_sing(r.sing),
                    r.canonical_character ? format_tuple(*r.canonical_character) : "none"});
  if (f == Format::Csv) return to_csv(t);
  std::ostringstream out;
  for (std::size_t i = 0; i < t.headers.size(); ++i) {
    std::string h = t.headers[i];
    out << h << std::string(20 - h.size(), ' ') << t.rows[0][i] << "\n";
  }
  out << "g_F" << std::string(17, ' ') << r.g_F << "\n";
  out << "g_D" << std::string(17, ' ') << r.g_D << "\n";
  for (const auto& w : r.warnings) out << "warning             " << w << "\n";
  return out.str();
}

}  // namespace sandwich
