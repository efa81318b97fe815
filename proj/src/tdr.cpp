#include "threeplane/tdr.hpp"

#include <map>
#include "json.hpp"
#include <set>

#include "threeplane/errors.hpp"

namespace threeplane {

using nlohmann::json;

namespace {

[[noreturn]] void semantic(const std::string& what) { throw TdrSemanticError(what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) semantic(where + ": missing \"" + key + "\"");
  return *it;
}

std::string as_id(const json& value, const std::string& where) {
  if (!value.is_string()) semantic(where + ": expected a string id");
  std::string id = value.get<std::string>();
  if (id.empty()) semantic(where + ": empty id");
  return id;
}

DartKey as_dart(const json& value, const std::string& where) {
  if (!value.is_object()) semantic(where + ": dart must be an object");
  DartKey key;
  key.edge = as_id(member(value, "edge", where), where);
  const json& seg = member(value, "seg", where);
  if (!seg.is_number_integer()) semantic(where + ": \"seg\" must be an integer");
  key.segment = seg.get<int>();
  const json& dir = member(value, "dir", where);
  if (dir == "fwd") {
    key.dir = Direction::forward;
  } else if (dir == "bwd") {
    key.dir = Direction::backward;
  } else {
    semantic(where + ": \"dir\" must be \"fwd\" or \"bwd\"");
  }
  return key;
}

}  // namespace

Drawing parse_tdr(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    std::size_t line = 1, column = 1;
    std::size_t limit = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw TdrSyntaxError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + err.what(),
                         line, column);
  }
  if (!root.is_object()) semantic("top level must be an object");

  Drawing d;
  const json& vertices = member(root, "vertices", "drawing");
  if (!vertices.is_array()) semantic("\"vertices\" must be an array");
  std::set<std::string> vertex_set;
  for (const auto& v : vertices) {
    std::string id = as_id(v, "vertices");
    if (!vertex_set.insert(id).second) semantic("duplicate vertex id '" + id + "'");
    d.vertices.push_back(id);
  }

  const json& edges = member(root, "edges", "drawing");
  if (!edges.is_array()) semantic("\"edges\" must be an array");
  std::set<std::string> edge_ids;
  std::map<std::string, int> crossing_uses;
  for (const auto& e : edges) {
    if (!e.is_object()) semantic("edge entries must be objects");
    EdgeRecord rec;
    rec.id = as_id(member(e, "id", "edge"), "edge");
    std::string where = "edge '" + rec.id + "'";
    if (!edge_ids.insert(rec.id).second) semantic("duplicate edge id '" + rec.id + "'");
    const json& ends = member(e, "ends", where);
    if (!ends.is_array() || ends.size() != 2) semantic(where + ": \"ends\" must list two vertices");
    for (int i = 0; i < 2; ++i) {
      rec.ends[i] = as_id(ends[i], where);
      if (!vertex_set.count(rec.ends[i])) semantic(where + ": unknown endpoint '" + rec.ends[i] + "'");
    }
    const json& crossings = member(e, "crossings", where);
    if (!crossings.is_array()) semantic(where + ": \"crossings\" must be an array");
    for (const auto& x : crossings) {
      std::string id = as_id(x, where);
      if (vertex_set.count(id)) semantic(where + ": crossing id '" + id + "' collides with a vertex id");
      ++crossing_uses[id];
      rec.crossings.push_back(id);
    }
    d.edges.push_back(std::move(rec));
  }
  for (const auto& [x, uses] : crossing_uses) {
    if (uses == 1) semantic("dangling crossing '" + x + "': listed on only one edge");
    if (uses > 2) semantic("crossing '" + x + "' listed more than twice");
  }

  const json& rotations = member(root, "rotations", "drawing");
  if (!rotations.is_object()) semantic("\"rotations\" must be an object");
  for (const auto& [node, list] : rotations.items()) {
    if (!vertex_set.count(node) && !crossing_uses.count(node)) semantic("rotation for unknown node '" + node + "'");
    if (!list.is_array()) semantic("rotation of '" + node + "' must be an array");
    auto& out = d.rotations[node];
    for (const auto& dart : list) out.push_back(as_dart(dart, "rotation of '" + node + "'"));
  }

  try {
    (void)planarize(d);
  } catch (const StructuralError& err) {
    semantic(err.what());
  }
  d.canonicalize();
  return d;
}

std::string serialize_tdr(const Drawing& drawing) {
  Drawing d = canonical(drawing);
  json root = json::object();
  root["vertices"] = d.vertices;
  json edges = json::array();
  for (const auto& e : d.edges) {
    edges.push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}, {"crossings", e.crossings}});
  }
  root["edges"] = std::move(edges);
  json rotations = json::object();
  for (const auto& [node, darts] : d.rotations) {
    json list = json::array();
    for (const auto& k : darts) {
      list.push_back({{"edge", k.edge}, {"seg", k.segment}, {"dir", k.dir == Direction::forward ? "fwd" : "bwd"}});
    }
    rotations[node] = std::move(list);
  }
  root["rotations"] = std::move(rotations);
  return root.dump(2) + "\n";
}

}  // namespace threeplane
