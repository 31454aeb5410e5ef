#pragma once

#include <string>
#include <variant>

#include "lambdamap/maps.hpp"

namespace lambdamap {

// Map file format:
//   {"darts": [sorted ids], "v": [[cycle], ...], "e": [[cycle], ...],
//    "root": id, "boundary": [ids in order]}
// Cycles list fixed points as singletons. Classical maps omit "boundary" and
// may omit "root".
std::string to_json(const RootedTrivalentMap& m, int indent = -1);
std::string to_json(const ClassicalMap& m, int indent = -1);

// Throws MalformedMap on schema violations or broken invariants.
RootedTrivalentMap rooted_map_from_json(const std::string& text);
ClassicalMap classical_map_from_json(const std::string& text);

// Rooted trivalent map when v has a fixed point, classical map otherwise.
std::variant<RootedTrivalentMap, ClassicalMap> any_map_from_json(const std::string& text);

}  // namespace lambdamap
