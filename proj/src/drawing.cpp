#include "threeplane/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "threeplane/errors.hpp"

namespace threeplane {

void Drawing::canonicalize() {
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
  for (auto it = rotations.begin(); it != rotations.end();) {
    auto& darts = it->second;
    if (darts.empty()) {
      it = rotations.erase(it);
      continue;
    }
    std::rotate(darts.begin(), std::min_element(darts.begin(), darts.end()), darts.end());
    ++it;
  }
}

Drawing canonical(Drawing drawing) {
  drawing.canonicalize();
  return drawing;
}

const EdgeRecord* Drawing::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> Drawing::crossing_ids() const {
  std::set<std::string> ids;
  for (const auto& e : edges) ids.insert(e.crossings.begin(), e.crossings.end());
  return {ids.begin(), ids.end()};
}

CombMap planarize(const Drawing& drawing) {
  std::vector<CombMap::NodeSpec> nodes;
  std::set<std::string> vertex_set(drawing.vertices.begin(), drawing.vertices.end());
  for (const auto& v : drawing.vertices) nodes.push_back({v, NodeKind::vertex});
  std::map<std::string, int> crossing_uses;
  for (const auto& e : drawing.edges) {
    for (const auto& x : e.crossings) ++crossing_uses[x];
  }
  for (const auto& [x, uses] : crossing_uses) {
    if (vertex_set.count(x)) throw StructuralError("crossing id '" + x + "' collides with a vertex id");
    if (uses == 1) throw StructuralError("dangling crossing '" + x + "'");
    if (uses > 2) throw StructuralError("crossing '" + x + "' lies on more than two edge positions");
    nodes.push_back({x, NodeKind::crossing});
  }

  std::vector<CombMap::SegmentSpec> segments;
  for (const auto& e : drawing.edges) {
    std::vector<std::string> points;
    points.push_back(e.ends[0]);
    points.insert(points.end(), e.crossings.begin(), e.crossings.end());
    points.push_back(e.ends[1]);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      segments.push_back({e.id, static_cast<int>(i), points[i], points[i + 1]});
    }
  }
  CombMap map(std::move(nodes), std::move(segments), drawing.rotations);
  for (std::size_t n = 0; n < map.node_count(); ++n) {
    if (map.node(static_cast<int>(n)).kind == NodeKind::crossing && map.rotation(static_cast<int>(n)).size() != 4) {
      throw StructuralError("crossing '" + map.node(static_cast<int>(n)).id + "' does not have four darts");
    }
  }
  return map;
}

DrawingStats stats(const Drawing& drawing) {
  DrawingStats s;
  s.n = static_cast<std::int64_t>(drawing.vertices.size());
  s.edges = static_cast<std::int64_t>(drawing.edges.size());
  s.crossings = static_cast<std::int64_t>(drawing.crossing_ids().size());
  for (const auto& e : drawing.edges) {
    std::size_t k = e.crossings.size();
    if (k > 3) throw PreconditionError("edge '" + e.id + "' has more than three crossings");
    ++s.by_crossings[k];
    if (k > 0) ++s.crossed_edges;
  }
  return s;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& ValidationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + name + "'");
}

namespace {

void fail(CheckResult& check, const std::string& witness) {
  if (check.pass) {
    check.pass = false;
    check.witness = witness;
  }
}

// Looks for two edge pieces between common points p and q that bound a
// region without any node inside.
std::string find_empty_lens(const Drawing& drawing, const CombMap& map, const FaceSet& faces) {
  struct EdgePoints {
    const EdgeRecord* edge;
    std::vector<int> points;
  };
  std::vector<EdgePoints> usable;
  for (const auto& e : drawing.edges) {
    if (e.ends[0] == e.ends[1]) continue;
    std::set<std::string> seen(e.crossings.begin(), e.crossings.end());
    if (seen.size() != e.crossings.size()) continue;
    EdgePoints ep{&e, {}};
    ep.points.push_back(map.node_index(e.ends[0]));
    for (const auto& x : e.crossings) ep.points.push_back(map.node_index(x));
    ep.points.push_back(map.node_index(e.ends[1]));
    usable.push_back(std::move(ep));
  }

  std::map<int, std::vector<int>> through;  // node -> usable edge indices
  for (std::size_t i = 0; i < usable.size(); ++i) {
    for (int p : usable[i].points) through[p].push_back(static_cast<int>(i));
  }
  std::map<std::pair<int, int>, std::vector<int>> common;
  for (const auto& [node, list] : through) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        common[{list[a], list[b]}].push_back(node);
      }
    }
  }

  auto position = [](const EdgePoints& ep, int node) {
    return static_cast<int>(std::find(ep.points.begin(), ep.points.end(), node) - ep.points.begin());
  };
  auto arc_darts = [&](const EdgePoints& ep, int from, int to, std::vector<int>& out) {
    if (from < to) {
      for (int k = from; k < to; ++k) out.push_back(map.dart({ep.edge->id, k, Direction::forward}));
    } else {
      for (int k = from - 1; k >= to; --k) out.push_back(map.dart({ep.edge->id, k, Direction::backward}));
    }
  };

  for (const auto& [pair, nodes] : common) {
    if (nodes.size() < 2) continue;
    const auto& e = usable[pair.first];
    const auto& f = usable[pair.second];
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        int p = nodes[a];
        int q = nodes[b];
        int ep = position(e, p), eq = position(e, q);
        int fp = position(f, p), fq = position(f, q);
        std::set<int> on_curve{p, q};
        bool simple = true;
        for (int k = std::min(ep, eq) + 1; k < std::max(ep, eq); ++k) on_curve.insert(e.points[k]);
        for (int k = std::min(fp, fq) + 1; k < std::max(fp, fq); ++k) {
          if (!on_curve.insert(f.points[k]).second) simple = false;
        }
        if (!simple) continue;

        std::vector<int> curve;
        arc_darts(e, ep, eq, curve);
        arc_darts(f, fq, fp, curve);
        std::set<int> curve_segments;
        for (int d : curve) curve_segments.insert(CombMap::segment_of(d));

        auto region = [&](bool left) {
          std::set<int> reached;
          std::vector<int> stack;
          for (int d : curve) {
            int face = faces.face_of_dart[left ? d : CombMap::twin(d)];
            if (reached.insert(face).second) stack.push_back(face);
          }
          while (!stack.empty()) {
            int face = stack.back();
            stack.pop_back();
            for (int d : faces.walks[face].darts) {
              if (curve_segments.count(CombMap::segment_of(d))) continue;
              int other = faces.face_of_dart[CombMap::twin(d)];
              if (reached.insert(other).second) stack.push_back(other);
            }
          }
          return reached;
        };
        auto left = region(true);
        auto right = region(false);
        bool separates = std::none_of(left.begin(), left.end(), [&](int c) { return right.count(c) > 0; });
        if (!separates) continue;
        for (const auto* side : {&left, &right}) {
          bool has_node = false;
          for (int face : *side) {
            for (int d : faces.walks[face].darts) {
              if (!on_curve.count(map.tail(d))) has_node = true;
            }
          }
          if (!has_node) {
            int face = *side->begin();
            return "edges " + e.edge->id + " and " + f.edge->id + " bound an empty lens between " +
                   map.node(p).id + " and " + map.node(q).id + " (face at dart " +
                   to_string(map.key(faces.walks[face].darts.front())) + ")";
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

ValidationReport validate(const Drawing& drawing) {
  ValidationReport report;
  for (const char* name : {"3-plane", "no-self-cross", "no-adjacent-cross", "crossing-alternation", "sphere",
                           "connected", "non-homotopic", "no-loops"}) {
    report.checks.push_back({name, true, ""});
  }
  auto& three_plane = report.checks[0];
  auto& self_cross = report.checks[1];
  auto& adjacent = report.checks[2];
  auto& alternation = report.checks[3];
  auto& sphere = report.checks[4];
  auto& connected = report.checks[5];
  auto& homotopic = report.checks[6];
  auto& loops = report.checks[7];

  std::map<std::string, std::vector<const EdgeRecord*>> crossing_edges;
  for (const auto& e : drawing.edges) {
    if (e.crossings.size() > 3) {
      fail(three_plane, "edge " + e.id + " has " + std::to_string(e.crossings.size()) + " crossings");
    }
    if (e.ends[0] == e.ends[1]) fail(loops, "edge " + e.id + " is a loop at " + e.ends[0]);
    for (const auto& x : e.crossings) crossing_edges[x].push_back(&e);
  }
  for (const auto& [x, list] : crossing_edges) {
    if (list.size() != 2) {
      fail(alternation, "crossing " + x + " lies on " + std::to_string(list.size()) + " edge positions");
      continue;
    }
    if (list[0] == list[1]) {
      fail(self_cross, "edge " + list[0]->id + " crosses itself at " + x);
      continue;
    }
    for (const auto& a : list[0]->ends) {
      for (const auto& b : list[1]->ends) {
        if (a == b) fail(adjacent, "edges " + list[0]->id + " and " + list[1]->id + " share " + a + " and cross at " + x);
      }
    }
    auto it = drawing.rotations.find(x);
    if (it == drawing.rotations.end() || it->second.size() != 4) {
      fail(alternation, "crossing " + x + " does not have four darts");
      continue;
    }
    const auto& r = it->second;
    if (r[0].edge != r[2].edge || r[1].edge != r[3].edge || r[0].edge == r[1].edge) {
      fail(alternation, "rotation at crossing " + x + " does not alternate between its two edges");
    }
  }

  try {
    CombMap map = planarize(drawing);
    FaceSet faces = compute_faces(map);
    long chi = static_cast<long>(map.node_count()) - static_cast<long>(map.segment_count()) +
               static_cast<long>(faces.walks.size());
    if (chi != 2) fail(sphere, "Euler characteristic is " + std::to_string(chi));
    if (!is_connected(map)) fail(connected, "planarization is disconnected");
    for (std::size_t n = 0; n < map.node_count(); ++n) {
      if (map.rotation(static_cast<int>(n)).empty() && map.node_count() > 1) {
        fail(connected, "vertex " + map.node(static_cast<int>(n)).id + " is isolated");
      }
    }
    if (drawing.vertices.empty()) fail(connected, "drawing has no vertices");
    std::string lens = find_empty_lens(drawing, map, faces);
    if (!lens.empty()) fail(homotopic, lens);
  } catch (const StructuralError& err) {
    fail(sphere, err.what());
    fail(connected, err.what());
    fail(homotopic, err.what());
  }
  return report;
}

}  // namespace threeplane
