#pragma once

#include "sandwich/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sandwich {

// value = slope * m + intercept, in the table's own parameter m
struct AffineForm {
  long long slope = 0;
  long long intercept = 0;
  long long at(long long m) const { return slope * m + intercept; }
  bool operator==(const AffineForm& o) const { return slope == o.slope && intercept == o.intercept; }
};

std::string format_form(const AffineForm& f, const std::string& var = "m");

struct ReferenceActionRow {
  std::string table;
  int row = 0;
  int a = 0;
  Group group;
  std::vector<Character> support;
  std::string source;
};

struct ReferenceActionTable {
  std::string id;
  int genus = 0;
  std::vector<ReferenceActionRow> rows;
};

struct ReferenceFamilyRow {
  std::string table;
  int row = 0;
  int a = 0;
  int b = 0;
  Group group;
  int g_F = 0;
  AffineForm p_g;
  AffineForm g_D;
  AffineForm K2;
  std::optional<AffineForm> t_z;
  std::string source;
};

struct ReferenceFamilyTable {
  std::string id;
  std::string note;
  std::vector<ReferenceFamilyRow> rows;
};

const std::vector<ReferenceActionTable>& action_tables();
const std::vector<ReferenceFamilyTable>& family_tables();
const ReferenceActionTable* find_action_table(const std::string& id);
const ReferenceFamilyTable* find_family_table(const std::string& id);
std::vector<std::string> reference_table_ids();

}  // namespace sandwich
