#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "posetmat/family.hpp"
#include "posetmat/hypermatrix.hpp"
#include "posetmat/poset.hpp"

namespace posetmat {

using Json = nlohmann::json;

// Matrix files: {"dims":[4,4],"ones":[[1,1],[2,3],[3,2],[4,4]]}, 1-based.
Json matrix_to_json(const HyperMatrix& m);
HyperMatrix matrix_from_json(const Json& j);

// Poset files: {"elements":[...],"covers":[[lo,hi],...]}.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// Family files: {"n":4,"sets":[[],[1],[1,2]]}.
Json family_to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);
Json set_to_json(SetMask s);

/// Built-in names (chain:k, antichain:k, diamond, vee:r, butterfly,
/// boolean:m) or a path to a poset file.
Poset parse_poset(std::string_view spec);
bool is_builtin_poset(std::string_view spec);

Json read_json_file(const std::filesystem::path& path);

}  // namespace posetmat
