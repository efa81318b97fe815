#include "threeplane/saturate.hpp"

#include <algorithm>
#include <set>

#include "threeplane/errors.hpp"

namespace threeplane {

namespace {

std::optional<FilledWitness> first_gap(const CombMap& map, const FaceSet& faces) {
  for (std::size_t f = 0; f < faces.walks.size(); ++f) {
    std::set<std::string> vertices;
    std::set<std::pair<std::string, std::string>> joined;
    for (int d : faces.walks[f].darts) {
      const auto& t = map.node(map.tail(d));
      const auto& h = map.node(map.head(d));
      if (t.kind == NodeKind::vertex) vertices.insert(t.id);
      if (t.kind == NodeKind::vertex && h.kind == NodeKind::vertex) joined.insert(std::minmax(t.id, h.id));
    }
    for (auto a = vertices.begin(); a != vertices.end(); ++a) {
      for (auto b = std::next(a); b != vertices.end(); ++b) {
        if (!joined.count({*a, *b})) return FilledWitness{static_cast<int>(f), *a, *b};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FilledWitness> filled_witness(const Drawing& drawing) {
  CombMap map = planarize(canonical(drawing));
  return first_gap(map, compute_faces(map));
}

bool is_filled(const Drawing& drawing) { return !filled_witness(drawing).has_value(); }

Drawing saturate(const Drawing& input) {
  Drawing d = canonical(input);
  ValidationReport report = validate(d);
  if (!report.valid()) {
    for (const auto& c : report.checks) {
      if (!c.pass) throw PreconditionError("saturate: invalid drawing (" + c.name + ": " + c.witness + ")");
    }
  }
  if (d.vertices.size() < 3) throw PreconditionError("saturate: needs at least three vertices");

  std::set<std::string> used;
  for (const auto& e : d.edges) used.insert(e.id);
  int next_id = 0;
  const std::size_t n = d.vertices.size() + d.crossing_ids().size();
  const std::size_t guard = 10 * n * n + 100;
  for (std::size_t round = 0;; ++round) {
    if (round > guard) throw InvariantViolation("saturate: insertion loop does not terminate");
    CombMap map = planarize(d);
    FaceSet faces = compute_faces(map);
    auto gap = first_gap(map, faces);
    if (!gap) break;

    const auto& walk = faces.walks[gap->cell];
    auto occurrence = [&](const std::string& id) {
      for (std::size_t i = 0; i < walk.darts.size(); ++i) {
        if (map.node(map.tail(walk.darts[i])).id == id) return i;
      }
      throw InvariantViolation("saturate: vertex " + id + " vanished from its cell");
    };
    std::string id;
    do {
      id = "s" + std::to_string(next_id++);
    } while (used.count(id));
    used.insert(id);
    CombMap grown = insert_edge_in_face(map, walk, occurrence(gap->u), occurrence(gap->v), id);
    d.edges.push_back({id, {gap->u, gap->v}, {}});
    d.rotations = grown.rotation_table();
    d.canonicalize();

    ValidationReport after = validate(d);
    if (!after.valid()) {
      for (const auto& c : after.checks) {
        if (!c.pass) throw InvariantViolation("saturate: inserting " + id + " broke " + c.name + ": " + c.witness);
      }
    }
  }
  return d;
}

bool is_3saturated(const Drawing& drawing) {
  return drawing.vertices.size() >= 3 && validate(drawing).valid() && is_filled(drawing);
}

}  // namespace threeplane
