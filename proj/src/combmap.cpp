#include "threeplane/combmap.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "threeplane/errors.hpp"

namespace threeplane {

std::string to_string(const DartKey& key) {
  return "(" + key.edge + "," + std::to_string(key.segment) + "," +
         (key.dir == Direction::forward ? "fwd" : "bwd") + ")";
}

CombMap::CombMap(std::vector<NodeSpec> nodes, std::vector<SegmentSpec> segments,
                 const RotationTable& rotations) {
  std::sort(nodes.begin(), nodes.end(), [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  for (const auto& n : nodes) {
    if (!node_index_.emplace(n.id, static_cast<int>(nodes_.size())).second) {
      throw StructuralError("duplicate node id '" + n.id + "'");
    }
    nodes_.push_back({n.id, n.kind});
  }

  std::sort(segments.begin(), segments.end(), [](const SegmentSpec& a, const SegmentSpec& b) {
    return std::tie(a.edge, a.index) < std::tie(b.edge, b.index);
  });
  for (const auto& s : segments) {
    int t = node_index(s.tail);
    int h = node_index(s.head);
    if (t < 0 || h < 0) {
      throw StructuralError("segment " + s.edge + "#" + std::to_string(s.index) + " has an unknown endpoint");
    }
    if (!segment_index_.emplace(std::make_pair(s.edge, s.index), static_cast<int>(segments_.size())).second) {
      throw StructuralError("duplicate segment " + s.edge + "#" + std::to_string(s.index));
    }
    segments_.push_back({s.edge, s.index, t, h});
  }

  rotation_.assign(nodes_.size(), {});
  rot_pos_.assign(dart_count(), -1);
  for (const auto& [id, darts] : rotations) {
    int n = node_index(id);
    if (n < 0) throw StructuralError("rotation given for unknown node '" + id + "'");
    for (const auto& k : darts) {
      int d = dart(k);
      if (d < 0) throw StructuralError("rotation of '" + id + "' names unknown dart " + to_string(k));
      if (tail(d) != n) {
        throw StructuralError("dart " + to_string(k) + " does not leave node '" + id + "'");
      }
      if (rot_pos_[d] >= 0) throw StructuralError("dart " + to_string(k) + " appears twice");
      rot_pos_[d] = static_cast<int>(rotation_[n].size());
      rotation_[n].push_back(d);
    }
  }
  for (std::size_t d = 0; d < dart_count(); ++d) {
    if (rot_pos_[d] < 0) throw StructuralError("dart " + to_string(key(static_cast<int>(d))) + " missing from rotations");
  }
}

int CombMap::node_index(const std::string& id) const {
  auto it = node_index_.find(id);
  return it == node_index_.end() ? -1 : it->second;
}

int CombMap::rot_next(int d) const {
  const auto& r = rotation_[tail(d)];
  return r[(rot_pos_[d] + 1) % r.size()];
}

int CombMap::rot_prev(int d) const {
  const auto& r = rotation_[tail(d)];
  return r[(rot_pos_[d] + r.size() - 1) % r.size()];
}

DartKey CombMap::key(int d) const {
  const auto& s = segments_[d >> 1];
  return {s.edge, s.index, is_forward(d) ? Direction::forward : Direction::backward};
}

int CombMap::dart(const DartKey& k) const {
  auto it = segment_index_.find({k.edge, k.segment});
  if (it == segment_index_.end()) return -1;
  return 2 * it->second + (k.dir == Direction::forward ? 0 : 1);
}

RotationTable CombMap::rotation_table() const {
  RotationTable table;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    auto& out = table[nodes_[n].id];
    for (int d : rotation_[n]) out.push_back(key(d));
  }
  return table;
}

std::vector<CombMap::NodeSpec> CombMap::node_specs() const {
  std::vector<NodeSpec> out;
  for (const auto& n : nodes_) out.push_back({n.id, n.kind});
  return out;
}

std::vector<CombMap::SegmentSpec> CombMap::segment_specs() const {
  std::vector<SegmentSpec> out;
  for (const auto& s : segments_) out.push_back({s.edge, s.index, nodes_[s.tail].id, nodes_[s.head].id});
  return out;
}

FaceSet compute_faces(const CombMap& map) {
  FaceSet out;
  out.face_of_dart.assign(map.dart_count(), -1);
  for (int start = 0; start < static_cast<int>(map.dart_count()); ++start) {
    if (out.face_of_dart[start] >= 0) continue;
    int f = static_cast<int>(out.walks.size());
    FaceWalk walk;
    int d = start;
    do {
      out.face_of_dart[d] = f;
      walk.darts.push_back(d);
      d = map.face_next(d);
    } while (d != start);
    out.walks.push_back(std::move(walk));
  }
  return out;
}

std::vector<FaceWalk> faces(const CombMap& map) { return compute_faces(map).walks; }

long euler_characteristic(const CombMap& map) {
  return static_cast<long>(map.node_count()) - static_cast<long>(map.segment_count()) +
         static_cast<long>(compute_faces(map).walks.size());
}

bool is_connected(const CombMap& map) {
  if (map.node_count() == 0) return true;
  std::vector<char> seen(map.node_count(), 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int n = todo.front();
    todo.pop();
    for (int d : map.rotation(n)) {
      int m = map.head(d);
      if (!seen[m]) {
        seen[m] = 1;
        ++reached;
        todo.push(m);
      }
    }
  }
  return reached == map.node_count();
}

CombMap insert_edge_in_face(const CombMap& map, const FaceWalk& face, std::size_t occurrence_u,
                            std::size_t occurrence_v, const std::string& edge_id) {
  const auto& walk = face.darts;
  if (occurrence_u >= walk.size() || occurrence_v >= walk.size() || occurrence_u == occurrence_v) {
    throw PreconditionError("insert_edge_in_face: occurrences must be distinct positions on the walk");
  }
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] < 0 || walk[i] >= static_cast<int>(map.dart_count()) ||
        map.face_next(walk[i]) != walk[(i + 1) % walk.size()]) {
      throw PreconditionError("insert_edge_in_face: not a face walk of this map");
    }
  }
  int u = map.tail(walk[occurrence_u]);
  int v = map.tail(walk[occurrence_v]);
  if (u == v) throw PreconditionError("insert_edge_in_face: both occurrences are at the same node");
  if (map.node(u).kind != NodeKind::vertex || map.node(v).kind != NodeKind::vertex) {
    throw PreconditionError("insert_edge_in_face: occurrences must be vertices");
  }
  auto segments = map.segment_specs();
  for (const auto& s : segments) {
    if (s.edge == edge_id) throw PreconditionError("insert_edge_in_face: edge id '" + edge_id + "' already used");
  }
  segments.push_back({edge_id, 0, map.node(u).id, map.node(v).id});

  RotationTable table = map.rotation_table();
  auto insert_before = [&](int node, const DartKey& anchor, DartKey fresh) {
    auto& r = table[map.node(node).id];
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(it, std::move(fresh));
  };
  insert_before(u, map.key(walk[occurrence_u]), {edge_id, 0, Direction::forward});
  insert_before(v, map.key(walk[occurrence_v]), {edge_id, 0, Direction::backward});
  return CombMap(map.node_specs(), std::move(segments), table);
}

}  // namespace threeplane
