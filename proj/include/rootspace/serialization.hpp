#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rootspace/dynkin.hpp"
#include "rootspace/root_system.hpp"

namespace rootspace {

/// {"rank": r, "gram": [row-major "p/q" strings], "roots": [["p/q", ...], ...]}
/// plus "labels" when the system has them.
nlohmann::json to_json(const RootSystem& rs);

/// Accepts the gram matrix flat (row-major) or nested, and rationals as
/// strings or integers. Throws ParseError naming the offending JSON pointer.
RootSystem root_system_from_json(const nlohmann::json& doc);
RootSystem parse_root_system(std::string_view text);
RootSystem load_root_system(const std::string& path);

/// {"nodes": [{"len2": "p/q"}], "edges": [{"a", "b", "mult", "arrow"}]}; arrow is
/// the index of the shorter node or null.
nlohmann::json to_json(const DynkinDiagram& d);

}  // namespace rootspace
