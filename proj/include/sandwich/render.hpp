#pragma once

#include "sandwich/atlas.hpp"
#include "sandwich/classifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sandwich {

enum class Format { Table, Csv, Json };
Format parse_format(const std::string& s);

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};
std::string to_aligned(const TextTable& t);
std::string to_csv(const TextTable& t);
std::string csv_field(const std::string& s);

// "(0,1)+2(1,0)": characters with their multiplicities
std::string format_profile(const EigenProfile& p);
std::string format_branch(const std::vector<BranchEntry>& branch);
std::string format_sing(const std::vector<SingularityRecord>& recs);

nlohmann::json invariants_json(const InvariantReport& r);
nlohmann::json family_json(const FamilyRow& row);
nlohmann::json discrepancy_json(const DiscrepancyReport& d);

// Family forms are printed in m = p_g + 1.
std::string render_families(const std::vector<FamilyRow>& rows, Format f);
std::string render_atlas(const std::vector<AtlasRow>& rows, Format f);
std::string render_covers(const std::vector<CoverData>& covers, Format f);
std::string render_discrepancies(const std::vector<DiscrepancyReport>& ds, Format f);
std::string render_invariants(const InvariantReport& r, Format f);

}  // namespace sandwich
