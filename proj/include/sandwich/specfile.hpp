#pragma once

#include "sandwich/surface.hpp"

#include <json.hpp>

#include <string>

namespace sandwich {

// {"base_genus": b, "branch": [{"elem": [...], "mult": m}], "twist": [[...]]}
nlohmann::json cover_to_json(const CoverData& c);
// A missing "twist" is filled with the canonical twist.
CoverData cover_from_json(const Group& g, const nlohmann::json& j);

// {"group": [...], "coverF": {...}, "coverD": {...}}
nlohmann::json sandwich_to_json(const SandwichSurface& s);
nlohmann::json sandwich_to_json(const CoverData& F, const CoverData& D);
SandwichSurface sandwich_from_json(const nlohmann::json& j);

SandwichSurface read_spec_file(const std::string& path);

}  // namespace sandwich
