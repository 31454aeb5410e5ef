#include "lambdamap/map_json.hpp"

#include <algorithm>

#include <json.hpp>

#include "lambdamap/errors.hpp"

namespace lambdamap {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json cycles_json(const Permutation& p, const std::vector<DartLabel>& labels) {
  ordered_json out = ordered_json::array();
  for (const auto& cycle : p.cycles()) {
    ordered_json c = ordered_json::array();
    for (Dart d : cycle) c.push_back(labels[d]);
    out.push_back(std::move(c));
  }
  return out;
}

struct ParsedMap {
  std::vector<DartLabel> darts;
  Permutation v;
  Permutation e;
  std::optional<Dart> root;
  std::optional<std::vector<Dart>> boundary;
};

Dart index_of(const std::vector<DartLabel>& darts, const json& value) {
  if (!value.is_number_unsigned()) throw MalformedMap("dart ids must be non-negative integers");
  const auto label = value.get<DartLabel>();
  const auto it = std::lower_bound(darts.begin(), darts.end(), label);
  if (it == darts.end() || *it != label) throw MalformedMap("unknown dart " + std::to_string(label));
  return static_cast<Dart>(it - darts.begin());
}

Permutation parse_cycles(const json& value, const std::vector<DartLabel>& darts, const char* key) {
  if (!value.is_array()) throw MalformedMap(std::string("\"") + key + "\" must be an array of cycles");
  std::vector<std::vector<Dart>> cycles;
  std::vector<bool> seen(darts.size(), false);
  for (const auto& cycle : value) {
    if (!cycle.is_array() || cycle.empty()) throw MalformedMap(std::string("bad cycle in \"") + key + "\"");
    std::vector<Dart> c;
    for (const auto& d : cycle) {
      const Dart idx = index_of(darts, d);
      if (seen[idx]) throw MalformedMap(std::string("dart repeated in \"") + key + "\"");
      seen[idx] = true;
      c.push_back(idx);
    }
    cycles.push_back(std::move(c));
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw MalformedMap(std::string("\"") + key + "\" must mention every dart (fixed points as singletons)");
  }
  return Permutation::from_cycles(darts.size(), cycles);
}

ParsedMap parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw MalformedMap(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw MalformedMap("map JSON must be an object");
  for (const char* key : {"darts", "v", "e"}) {
    if (!doc.contains(key)) throw MalformedMap(std::string("missing key \"") + key + "\"");
  }
  ParsedMap out;
  if (!doc["darts"].is_array()) throw MalformedMap("\"darts\" must be an array");
  for (const auto& d : doc["darts"]) {
    if (!d.is_number_unsigned()) throw MalformedMap("dart ids must be non-negative integers");
    out.darts.push_back(d.get<DartLabel>());
  }
  for (std::size_t i = 1; i < out.darts.size(); ++i) {
    if (out.darts[i - 1] >= out.darts[i]) throw MalformedMap("\"darts\" must be sorted and distinct");
  }
  out.v = parse_cycles(doc["v"], out.darts, "v");
  out.e = parse_cycles(doc["e"], out.darts, "e");
  if (doc.contains("root") && !doc["root"].is_null()) out.root = index_of(out.darts, doc["root"]);
  if (doc.contains("boundary")) {
    if (!doc["boundary"].is_array()) throw MalformedMap("\"boundary\" must be an array");
    std::vector<Dart> boundary;
    for (const auto& b : doc["boundary"]) boundary.push_back(index_of(out.darts, b));
    out.boundary = std::move(boundary);
  }
  return out;
}

}  // namespace

std::string to_json(const RootedTrivalentMap& m, int indent) {
  ordered_json doc;
  doc["darts"] = m.darts();
  doc["v"] = cycles_json(m.v(), m.darts());
  doc["e"] = cycles_json(m.e(), m.darts());
  doc["root"] = m.darts()[m.root()];
  ordered_json boundary = ordered_json::array();
  for (Dart b : m.boundary()) boundary.push_back(m.darts()[b]);
  doc["boundary"] = std::move(boundary);
  return doc.dump(indent);
}

std::string to_json(const ClassicalMap& m, int indent) {
  ordered_json doc;
  doc["darts"] = m.darts();
  doc["v"] = cycles_json(m.v(), m.darts());
  doc["e"] = cycles_json(m.e(), m.darts());
  if (m.root()) doc["root"] = m.darts()[*m.root()];
  return doc.dump(indent);
}

RootedTrivalentMap rooted_map_from_json(const std::string& text) {
  ParsedMap p = parse(text);
  if (!p.root) throw MalformedMap("missing key \"root\"");
  if (!p.boundary) throw MalformedMap("missing key \"boundary\"");
  try {
    return RootedTrivalentMap(std::move(p.darts), std::move(p.v), std::move(p.e), *p.root,
                              std::move(*p.boundary));
  } catch (const InvalidArgument& err) {
    throw MalformedMap(err.what());
  }
}

ClassicalMap classical_map_from_json(const std::string& text) {
  ParsedMap p = parse(text);
  if (p.boundary && !p.boundary->empty()) throw MalformedMap("a classical map has no boundary");
  return ClassicalMap(std::move(p.darts), std::move(p.v), std::move(p.e), p.root);
}

std::variant<RootedTrivalentMap, ClassicalMap> any_map_from_json(const std::string& text) {
  ParsedMap p = parse(text);
  if (!p.v.fixed_points().empty()) {
    if (!p.root) throw MalformedMap("missing key \"root\"");
    return RootedTrivalentMap(std::move(p.darts), std::move(p.v), std::move(p.e), *p.root,
                              p.boundary.value_or(std::vector<Dart>{}));
  }
  if (p.boundary && !p.boundary->empty()) throw MalformedMap("a classical map has no boundary");
  return ClassicalMap(std::move(p.darts), std::move(p.v), std::move(p.e), p.root);
}

}  // namespace lambdamap
