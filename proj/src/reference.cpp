#include "sandwich/reference.hpp"

#include "sandwich/errors.hpp"

#include <json.hpp>

namespace sandwich {

// generated from data/reference_tables.json at build time
extern const char* const kReferenceTablesJson;

std::string format_form(const AffineForm& f, const std::string& var) {
  std::string s;
  if (f.slope == 0) return std::to_string(f.intercept);
  if (f.slope == 1) s = var;
  else if (f.slope == -1) s = "-" + var;
  else s = std::to_string(f.slope) + var;
  if (f.intercept > 0) s += "+" + std::to_string(f.intercept);
  else if (f.intercept < 0) s += std::to_string(f.intercept);
  return s;
}

namespace {

struct Tables {
  std::vector<ReferenceActionTable> actions;
  std::vector<ReferenceFamilyTable> families;
};

AffineForm form_of(const nlohmann::json& j) { return {j.at(0).get<long long>(), j.at(1).get<long long>()}; }

Tables load() {
  Tables t;
  auto doc = nlohmann::json::parse(kReferenceTablesJson);
  for (auto& [id, tab] : doc.at("action_tables").items()) {
    ReferenceActionTable at{id, tab.at("genus").get<int>(), {}};
    int r = 0;
    for (const auto& row : tab.at("rows")) {
      ReferenceActionRow ar;
      ar.table = id;
      ar.row = ++r;
      ar.a = row.at("a").get<int>();
      ar.group = Group(row.at("group").get<std::vector<int>>());
      for (const auto& c : row.at("support")) ar.support.push_back(c.get<std::vector<int>>());
      ar.source = row.at("source").get<std::string>();
      at.rows.push_back(std::move(ar));
    }
    t.actions.push_back(std::move(at));
  }
  for (auto& [id, tab] : doc.at("family_tables").items()) {
    ReferenceFamilyTable ft{id, tab.value("note", ""), {}};
    int r = 0;
    for (const auto& row : tab.at("rows")) {
      ReferenceFamilyRow fr;
      fr.table = id;
      fr.row = ++r;
      fr.a = row.at("a").get<int>();
      fr.b = row.at("b").get<int>();
      fr.group = Group(row.at("group").get<std::vector<int>>());
      fr.g_F = row.at("g_F").get<int>();
      fr.p_g = form_of(row.at("p_g"));
      fr.g_D = form_of(row.at("g_D"));
      if (row.contains("K2")) {
        fr.K2 = form_of(row.at("K2"));
      } else {
        // K2 = s * chi + c with chi = 1 - (a + b) + p_g
        AffineForm kc = form_of(row.at("K2_chi"));
        fr.K2 = {kc.slope * fr.p_g.slope,
                 kc.slope * (1 - fr.a - fr.b + fr.p_g.intercept) + kc.intercept};
      }
      if (row.contains("t_z")) fr.t_z = form_of(row.at("t_z"));
      fr.source = row.at("source").get<std::string>();
      ft.rows.push_back(std::move(fr));
    }
    t.families.push_back(std::move(ft));
  }
  return t;
}

const Tables& tables() {
  static const Tables t = load();
  return t;
}

}  // namespace

const std::vector<ReferenceActionTable>& action_tables() { return tables().actions; }
const std::vector<ReferenceFamilyTable>& family_tables() { return tables().families; }

const ReferenceActionTable* find_action_table(const std::string& id) {
  for (const auto& t : action_tables())
    if (t.id == id) return &t;
  return nullptr;
}

const ReferenceFamilyTable* find_family_table(const std::string& id) {
  for (const auto& t : family_tables())
    if (t.id == id) return &t;
  return nullptr;
}

std::vector<std::string> reference_table_ids() {
  std::vector<std::string> ids;
  for (const auto& t : action_tables()) ids.push_back(t.id);
  for (const auto& t : family_tables()) ids.push_back(t.id);
  return ids;
}

}  // namespace sandwich
