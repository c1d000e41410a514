#include "sandwich/specfile.hpp"

#include "sandwich/errors.hpp"

#include <fstream>
#include <sstream>

namespace sandwich {

nlohmann::json cover_to_json(const CoverData& c) {
  nlohmann::json br = nlohmann::json::array();
  for (const auto& b : c.branch) br.push_back({{"elem", b.elem}, {"mult", b.mult}});
  nlohmann::json tw = nlohmann::json::array();
  for (const auto& t : c.twist) tw.push_back(t);
  return {{"base_genus", c.base_genus}, {"branch", br}, {"twist", tw}};
}

namespace {

Elem elem_of(const Group& g, const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, what + " must be an integer array");
  Elem e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::InvalidInput, what + " must be an integer array");
    e.push_back(x.get<int>());
  }
  if (!g.valid(e)) fail(ErrorKind::InvalidInput, what + " " + format_tuple(e) + " is not an element of " + g.name());
  return e;
}

}  // namespace

CoverData cover_from_json(const Group& g, const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "cover must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "base_genus" && k != "branch" && k != "twist") fail(ErrorKind::InvalidInput, "unknown cover field '" + k + "'");
  if (!j.contains("base_genus") || !j["base_genus"].is_number_integer())
    fail(ErrorKind::InvalidInput, "cover needs an integer base_genus");
  const int b = j["base_genus"].get<int>();
  if (!j.contains("branch") || !j["branch"].is_array()) fail(ErrorKind::InvalidInput, "cover needs a branch array");
  std::vector<BranchEntry> branch;
  for (const auto& e : j["branch"]) {
    if (!e.is_object() || !e.contains("elem") || !e.contains("mult") || !e["mult"].is_number_integer())
      fail(ErrorKind::InvalidInput, "branch entries are {\"elem\": [...], \"mult\": int}");
    branch.push_back({elem_of(g, e["elem"], "branch element"), e["mult"].get<int>()});
  }
  if (!j.contains("twist")) return make_cover_auto_twist(g, b, std::move(branch));
  if (!j["twist"].is_array()) fail(ErrorKind::InvalidInput, "twist must be an array of elements");
  std::vector<Elem> twist;
  for (const auto& t : j["twist"]) twist.push_back(elem_of(g, t, "twist element"));
  return make_cover(g, b, std::move(branch), std::move(twist));
}

nlohmann::json sandwich_to_json(const CoverData& F, const CoverData& D) {
  return {{"group", F.group.factors()}, {"coverF", cover_to_json(F)}, {"coverD", cover_to_json(D)}};
}

nlohmann::json sandwich_to_json(const SandwichSurface& s) { return sandwich_to_json(s.F, s.D); }

SandwichSurface sandwich_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "spec file must hold a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "group" && k != "coverF" && k != "coverD") fail(ErrorKind::InvalidInput, "unknown spec field '" + k + "'");
  for (const char* k : {"group", "coverF", "coverD"})
    if (!j.contains(k)) fail(ErrorKind::InvalidInput, std::string("spec file lacks \"") + k + "\"");
  if (!j["group"].is_array()) fail(ErrorKind::InvalidInput, "group must be an array of factors");
  std::vector<int> factors;
  for (const auto& x : j["group"]) {
    if (!x.is_number_integer()) fail(ErrorKind::InvalidInput, "group factors must be integers");
    factors.push_back(x.get<int>());
  }
  Group g(factors);
  return make_sandwich(cover_from_json(g, j["coverF"]), cover_from_json(g, j["coverD"]));
}

SandwichSurface read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, "spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return sandwich_from_json(j);
}

}  // namespace sandwich
