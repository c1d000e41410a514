#pragma once

#include "sandwich/classifier.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace sandwich {

// args excludes the program name. Exit codes: 0 success, 1 invalid input,
// 2 internal-consistency failure.
// Against an action table (atlas) or a family table (classifier over the
// table's groups at p_g in [pg_lo, pg_hi]).
std::vector<DiscrepancyReport> compare_table(const std::string& id, int pg_lo, int pg_hi, int workers = 0);

int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sandwich
