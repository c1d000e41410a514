#pragma once

#include "sandwich/reference.hpp"
#include "sandwich/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sandwich {

struct ClassifyRequest {
  int genus_f = 3;
  std::vector<Group> groups;  // empty: every group of order <= 4 g_F + 4
  std::optional<int> base_a;  // empty: any
  std::optional<int> base_b;  // empty: 0 and 1
  int pg_lo = 3;
  int pg_hi = 6;
  int workers = 0;
};

struct Solution {
  CoverData F;
  CoverData D;
  Character chi0;
  InvariantReport report;
};

// Canonical-pencil sandwiches at each p_g in range, one per Aut(G)-orbit of
// (F branch, D branch), sorted canonically.
std::vector<Solution> search_solutions(const ClassifyRequest& req);

// All D-covers over a base of genus b making (F, D) a canonical pencil with
// the given p_g; unfiltered by Aut. Exposed for the completeness oracle.
std::vector<Solution> solutions_for(const CoverData& F, int b, int p_g);

// y = slope * p_g + intercept
struct LinearForm {
  Rational slope;
  Rational intercept;
  Rational at(long long p) const { return slope * p + intercept; }
  bool operator==(const LinearForm& o) const { return slope == o.slope && intercept == o.intercept; }
  bool operator<(const LinearForm& o) const;
};

std::string format_linear(const LinearForm& f, long long shift = 0, const std::string& var = "m");

struct FamilyPoint {
  int p_g = 0;
  int g_D = 0;
  long long K2 = 0;
  long long t_z = 0;
  long long chi = 0;
  long long euler_e = 0;
  std::vector<SingularityRecord> sing;
};

struct Realization {
  CoverData F;
  Character chi0;
  std::vector<Solution> members;  // ordered by p_g
};

struct FamilyRow {
  Group group;
  int a = 0;
  int b = 0;
  int g_F = 0;
  std::vector<FamilyPoint> points;  // ordered by p_g
  bool fitted = false;
  LinearForm g_D;
  LinearForm K2;
  LinearForm t_z;
  std::vector<std::pair<int, int>> sing_types;
  std::vector<Realization> realizations;
  bool reaches_top = false;  // present at the top of the searched p_g range
  bool unbounded() const { return fitted && reaches_top; }
};

struct FitResult {
  bool ok = false;
  LinearForm form;
};
// Exact fit through (x, y) points; needs at least 3 distinct x.
FitResult fit_linear(const std::vector<std::pair<long long, long long>>& pts);

std::vector<FamilyRow> fit_families(const std::vector<Solution>& sols, int pg_hi);

std::vector<FamilyRow> classify(const ClassifyRequest& req);

struct DiscrepancyReport {
  std::string table;
  int row = 0;  // 0 for engine rows absent from the table
  std::string field;
  std::string paper;
  std::string computed;
  std::string delta;
};

// Field-wise comparison in the table's own parameter m. With a scope, table
// rows outside the searched (g_F, group, a, b) are skipped.
std::vector<DiscrepancyReport> compare_with_reference(const std::vector<FamilyRow>& rows, const std::string& table_id,
                                                      const ClassifyRequest* scope = nullptr);
bool in_request_scope(const ClassifyRequest& req, const ReferenceFamilyRow& row);

struct AtlasRow;
std::vector<DiscrepancyReport> compare_atlas_with_reference(const std::vector<AtlasRow>& rows, const std::string& table_id);

// Row-level matching used by the comparison; exposed for reporting.
struct RowMatch {
  int ref_row = 0;
  int engine_index = -1;  // into the filtered engine rows, -1 if missing
  long long shift = 0;    // m = p_g + shift
  std::vector<std::string> mismatched_fields;
};
std::vector<RowMatch> match_reference_rows(const std::vector<FamilyRow>& rows, const ReferenceFamilyTable& table,
                                           std::vector<int>* extras = nullptr);

}  // namespace sandwich
