#include "threeplane/census.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "threeplane/errors.hpp"
#include "threeplane/saturate.hpp"

namespace threeplane {

std::string_view name(CellType type) {
  switch (type) {
    case CellType::xtri: return "XTRI";
    case CellType::xquad: return "XQUAD";
    case CellType::vtri: return "VTRI";
    case CellType::vquad: return "VQUAD";
    case CellType::xpent: return "XPENT";
    case CellType::vvtri: return "VVTRI";
    case CellType::kite: return "KITE";
    case CellType::large: return "LARGE";
    case CellType::other: return "OTHER";
  }
  return "?";
}

std::string_view name(ConfigType type) {
  switch (type) {
    case ConfigType::cfg9: return "CFG9";
    case ConfigType::cfg10: return "CFG10";
    case ConfigType::cfg12: return "CFG12";
    case ConfigType::cfg13: return "CFG13";
    case ConfigType::cfg14: return "CFG14";
    case ConfigType::cfg15: return "CFG15";
    case ConfigType::cfg18: return "CFG18";
  }
  return "?";
}

CellType classify_cell(const CellRecord& r) {
  if (r.size >= 6) {
    if (!r.degenerate && r.vertex_incidences == 2 && r.crossing_incidences == 2 && r.segment_incidences == 4) {
      const auto& k = r.kinds;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == NodeKind::vertex && k[(i + 1) % k.size()] == NodeKind::vertex) return CellType::kite;
      }
    }
    return CellType::large;
  }
  if (r.degenerate) return CellType::other;
  const int v = r.vertex_incidences;
  const int x = r.crossing_incidences;
  switch (r.size) {
    case 3:
      if (v == 0 && x == 3) return CellType::xtri;
      break;
    case 4:
      if (v == 0 && x == 4) return CellType::xquad;
      if (v == 1 && x == 2) return CellType::vtri;
      break;
    case 5:
      if (v == 0 && x == 5) return CellType::xpent;
      if (v == 1 && x == 3) return CellType::vquad;
      if (v == 2 && x == 1) return CellType::vvtri;
      break;
    default:
      break;
  }
  return CellType::other;
}

Arrangement::Arrangement(const Drawing& drawing)
    : drawing_(canonical(drawing)), map_(planarize(drawing_)), faces_(compute_faces(map_)) {
  for (const auto& e : drawing_.edges) edge_crossings_[e.id] = e.crossings.size();
  for (std::size_t f = 0; f < faces_.walks.size(); ++f) {
    CellRecord r;
    r.id = static_cast<int>(f);
    r.darts = faces_.walks[f].darts;
    std::set<int> seen_nodes, seen_segments;
    for (int d : r.darts) {
      int n = map_.tail(d);
      r.nodes.push_back(n);
      r.kinds.push_back(map_.node(n).kind);
      if (r.kinds.back() == NodeKind::vertex) {
        ++r.vertex_incidences;
      } else {
        ++r.crossing_incidences;
      }
      if (!seen_nodes.insert(n).second) r.degenerate = true;
      if (!seen_segments.insert(CombMap::segment_of(d)).second) r.degenerate = true;
    }
    r.segment_incidences = static_cast<int>(r.darts.size());
    r.size = r.vertex_incidences + r.segment_incidences;
    types_.push_back(classify_cell(r));
    cells_.push_back(std::move(r));
  }
  extract_trails();
}

std::size_t Arrangement::crossings_on_edge(const std::string& edge) const { return edge_crossings_.at(edge); }

bool Arrangement::is_inner(int segment) const {
  const auto& s = map_.segment(segment);
  return map_.node(s.tail).kind == NodeKind::crossing && map_.node(s.head).kind == NodeKind::crossing;
}

std::vector<int> Arrangement::walk_from_vertex(int cell) const {
  std::vector<int> walk = cells_[cell].darts;
  auto it = std::find_if(walk.begin(), walk.end(),
                         [&](int d) { return map_.node(map_.tail(d)).kind == NodeKind::vertex; });
  if (it != walk.end()) std::rotate(walk.begin(), it, walk.end());
  return walk;
}

int Arrangement::trail_far_end(int segment, int cell) const {
  const Trail& t = trails_.at(trail_of_segment_.at(segment));
  if (t.cells.front() == cell && t.interior_segments.front() == segment) return t.cells.back();
  if (t.cells.back() == cell && t.interior_segments.back() == segment) return t.cells.front();
  throw InvariantViolation("cell " + std::to_string(cell) + " is not an endpoint of the trail through segment " +
                           std::to_string(segment));
}

void Arrangement::extract_trails() {
  trail_of_segment_.assign(map_.segment_count(), -1);
  const std::size_t guard = cells_.size() + 1;

  // Follows XQUAD cells from the cell on the right of `dart`.
  auto extend = [&](int dart, std::vector<int>& cells, std::vector<int>& segments, std::set<int>& used) {
    for (std::size_t steps = 0;; ++steps) {
      if (steps > guard) throw InvariantViolation("trail extension does not terminate");
      int c = faces_.face_of_dart[dart];
      cells.push_back(c);
      if (types_[c] != CellType::xquad) return;
      const auto& walk = cells_[c].darts;
      auto pos = std::find(walk.begin(), walk.end(), dart) - walk.begin();
      int opposite = walk[(pos + 2) % 4];
      int s = CombMap::segment_of(opposite);
      if (!used.insert(s).second) throw InvariantViolation("trail revisits segment " + std::to_string(s));
      segments.push_back(s);
      dart = CombMap::twin(opposite);
    }
  };

  for (int s = 0; s < static_cast<int>(map_.segment_count()); ++s) {
    if (!is_inner(s) || trail_of_segment_[s] >= 0) continue;
    std::set<int> used{s};
    std::vector<int> ahead_cells, ahead_segments, back_cells, back_segments;
    extend(2 * s + 1, back_cells, back_segments, used);
    extend(2 * s, ahead_cells, ahead_segments, used);
    Trail t;
    t.cells.assign(back_cells.rbegin(), back_cells.rend());
    t.cells.insert(t.cells.end(), ahead_cells.begin(), ahead_cells.end());
    t.interior_segments.assign(back_segments.rbegin(), back_segments.rend());
    t.interior_segments.push_back(s);
    t.interior_segments.insert(t.interior_segments.end(), ahead_segments.begin(), ahead_segments.end());
    t.endpoint_types = {types_[t.cells.front()], types_[t.cells.back()]};
    for (CellType end : t.endpoint_types) {
      if (end == CellType::xquad) throw InvariantViolation("trail ends in an XQUAD cell");
    }
    int first = t.interior_segments.front();
    for (int d : {2 * first, 2 * first + 1}) t.bounding_edges.push_back(map_.segment(CombMap::segment_of(map_.rot_next(d))).edge);
    std::sort(t.bounding_edges.begin(), t.bounding_edges.end());
    int index = static_cast<int>(trails_.size());
    for (int seg : t.interior_segments) {
      if (trail_of_segment_[seg] >= 0) throw InvariantViolation("segment " + std::to_string(seg) + " lies on two trails");
      trail_of_segment_[seg] = index;
    }
    trails_.push_back(std::move(t));
  }
}

std::vector<CellRecord> cells(const Drawing& drawing) { return Arrangement(drawing).cells(); }

std::vector<Trail> extract_trails(const Drawing& drawing) { return Arrangement(drawing).trails(); }

TrailPair trail_pair(CellType a, CellType b) {
  a = trail_class(a);
  b = trail_class(b);
  auto rank = [](CellType t) { return std::find(kTrailTypes.begin(), kTrailTypes.end(), t) - kTrailTypes.begin(); };
  if (rank(b) < rank(a)) std::swap(a, b);
  return {a, b};
}

std::int64_t TrailCounts::get(CellType a, CellType b) const {
  auto it = pairs.find(trail_pair(a, b));
  return it == pairs.end() ? 0 : it->second;
}

TrailCounts trail_counts(const std::vector<Trail>& trails) {
  TrailCounts out;
  for (std::size_t i = 0; i < kTrailTypes.size(); ++i) {
    for (std::size_t j = i; j < kTrailTypes.size(); ++j) out.pairs[{kTrailTypes[i], kTrailTypes[j]}] = 0;
  }
  for (const auto& t : trails) {
    auto key = trail_pair(t.endpoint_types[0], t.endpoint_types[1]);
    auto it = out.pairs.find(key);
    if (it == out.pairs.end()) {
      ++out.with_other_endpoint;
    } else {
      ++it->second;
    }
  }
  return out;
}

bool is_saturated_xpent(const Arrangement& a, int cell) {
  if (a.type(cell) != CellType::xpent) throw PreconditionError("is_saturated_xpent: cell is not an XPENT");
  for (int d : a.cells()[cell].darts) {
    CellType far = a.type(a.trail_far_end(CombMap::segment_of(d), cell));
    if (far != CellType::vtri && far != CellType::xpent && far != CellType::xtri) return false;
  }
  return true;
}

std::int64_t ConfigCensus::count(ConfigType type) const {
  return std::count_if(configurations.begin(), configurations.end(),
                       [&](const Configuration& c) { return c.type == type; });
}

namespace {

class Detector {
 public:
  Detector(const Arrangement& a, bool strict) : a_(a), map_(a.map()), strict_(strict) {}

  ConfigCensus run() {
    for (std::size_t i = 0; i < a_.trails().size(); ++i) from_trail(static_cast<int>(i));
    for (std::size_t c = 0; c < a_.cells().size(); ++c) {
      if (a_.type(static_cast<int>(c)) == CellType::vtri) from_vtri(static_cast<int>(c));
      if (a_.type(static_cast<int>(c)) == CellType::xpent && is_saturated_xpent(a_, static_cast<int>(c))) {
        from_xpent(static_cast<int>(c));
      }
    }
    out_.complete = strict_ && out_.failures.empty();

    std::map<std::pair<int, int>, int> designated;
    std::map<std::string, int> load;
    for (const auto& c : out_.configurations) {
      for (const auto& s : c.vvtri_segments) {
        if (++designated[s] > 1) out_.vvtri_segments_distinct = false;
      }
      if (c.twice_crossed_edge) load[*c.twice_crossed_edge] += c.type == ConfigType::cfg15 ? 2 : 1;
    }
    for (const auto& [edge, l] : load) {
      if (l > 2) out_.edge_loads_ok = false;
    }
    return std::move(out_);
  }

 private:
  int face(int dart) const { return a_.cell_of_dart(dart); }
  int seg(int dart) const { return CombMap::segment_of(dart); }
  std::string cell_name(int c) const { return "c" + std::to_string(c) + "(" + std::string(name(a_.type(c))) + ")"; }
  std::string trail_name(int t) const {
    const Trail& tr = a_.trails()[t];
    std::string s = "trail " + std::to_string(t) + " [";
    for (std::size_t i = 0; i < tr.cells.size(); ++i) s += (i ? " " : "") + cell_name(tr.cells[i]);
    return s + "]";
  }

  void failure(const std::string& what) {
    if (strict_) throw LemmaWitnessFailure("lemma witness failure: " + what);
    out_.failures.push_back(what);
  }

  void add(Configuration c) {
    std::sort(c.cells.begin(), c.cells.end());
    std::sort(c.vvtri_segments.begin(), c.vvtri_segments.end());
    auto key = std::tie(c.type, c.cells, c.vvtri_segments);
    for (const auto& existing : out_.configurations) {
      if (std::tie(existing.type, existing.cells, existing.vvtri_segments) == key) return;
    }
    out_.configurations.push_back(std::move(c));
  }

  // Dart of `segment` whose face is `cell`.
  int dart_in(int segment, int cell) const {
    for (int d : {2 * segment, 2 * segment + 1}) {
      if (face(d) == cell) return d;
    }
    throw InvariantViolation("segment " + std::to_string(segment) + " does not bound cell " + std::to_string(cell));
  }

  void from_trail(int index) {
    const Trail& t = a_.trails()[index];
    auto pair = trail_pair(t.endpoint_types[0], t.endpoint_types[1]);
    if (t.length() == 2 && (pair == TrailPair{CellType::xtri, CellType::vquad} ||
                            pair == TrailPair{CellType::vquad, CellType::xpent})) {
      vquad_neighbor(index, pair.first == CellType::xtri ? ConfigType::cfg12 : ConfigType::cfg10);
    } else if (t.length() == 2 && pair == TrailPair{CellType::xtri, CellType::xpent}) {
      kite_pair(index);
    } else if (t.length() == 3 && pair == TrailPair{CellType::vtri, CellType::vquad}) {
      Configuration c{ConfigType::cfg18, t.cells, {}, std::nullopt, trail_name(index)};
      for (const auto& e : t.bounding_edges) {
        if (a_.crossings_on_edge(e) == 2) {
          c.twice_crossed_edge = e;
          break;
        }
      }
      if (!c.twice_crossed_edge) {
        failure(trail_name(index) + " has no twice-crossed bounding edge");
        return;
      }
      add(std::move(c));
    }
  }

  void vquad_neighbor(int index, ConfigType type) {
    const Trail& t = a_.trails()[index];
    int q = a_.type(t.cells[0]) == CellType::vquad ? t.cells[0] : t.cells[1];
    int s = t.interior_segments[0];
    auto walk = a_.walk_from_vertex(q);
    int inside = dart_in(s, q);
    int outer;
    if (inside == walk[1]) {
      outer = walk[3];
    } else if (inside == walk[2]) {
      outer = walk[0];
    } else {
      failure(trail_name(index) + ": trail segment is not inner on the VQUAD");
      return;
    }
    int c = face(CombMap::twin(outer));
    if (a_.type(c) != CellType::vvtri) {
      failure(trail_name(index) + ": cell " + cell_name(c) + " beside the VQUAD is not a VVTRI");
      return;
    }
    add({type, {t.cells[0], t.cells[1], c}, {{c, seg(outer)}}, std::nullopt, trail_name(index)});
  }

  void kite_pair(int index) {
    const Trail& t = a_.trails()[index];
    int tri = a_.type(t.cells[0]) == CellType::xtri ? t.cells[0] : t.cells[1];
    int d0 = dart_in(t.interior_segments[0], tri);
    int d1 = map_.face_next(d0);
    int d2 = map_.face_next(d1);
    int opposite = face(map_.rot_next(map_.rot_next(d2)));
    if (a_.type(opposite) != CellType::vvtri) {
      failure(trail_name(index) + ": cell " + cell_name(opposite) + " opposite the XTRI apex is not a VVTRI");
      return;
    }
    std::vector<std::pair<int, int>> candidates;  // (kite cell, shared segment)
    int across_d2 = face(CombMap::twin(d2));
    int across_d1 = face(CombMap::twin(d1));
    if (a_.type(across_d2) == CellType::kite) candidates.push_back({across_d2, seg(map_.rot_next(d2))});
    if (a_.type(across_d1) == CellType::kite) {
      candidates.push_back({across_d1, seg(map_.rot_next(map_.rot_next(map_.rot_next(d2))))});
    }
    if (candidates.empty()) {
      failure(trail_name(index) + ": no KITE next to " + cell_name(opposite));
      return;
    }
    auto [kite, shared] = *std::min_element(candidates.begin(), candidates.end());
    add({ConfigType::cfg9, {kite, opposite}, {{opposite, shared}}, std::nullopt, trail_name(index)});
  }

  void from_vtri(int cell) {
    auto walk = a_.walk_from_vertex(cell);
    const std::string& e = map_.segment(seg(walk[1])).edge;
    std::size_t k = a_.crossings_on_edge(e);
    int n0 = face(CombMap::twin(walk[0]));
    int n2 = face(CombMap::twin(walk[2]));
    bool v0 = a_.type(n0) == CellType::vvtri;
    bool v2 = a_.type(n2) == CellType::vvtri;
    std::string src = cell_name(cell);
    if (k == 2) {
      if (!v0 || !v2) {
        failure(src + ": edge " + e + " is crossed twice but the VTRI lacks two VVTRI neighbors");
        return;
      }
      add({ConfigType::cfg14, {cell, n0, n2}, {{n0, seg(walk[0])}, {n2, seg(walk[2])}}, std::nullopt, src});
    } else if (k == 3) {
      if (!v0 && !v2) {
        failure(src + ": edge " + e + " is crossed three times but the VTRI has no VVTRI neighbor");
        return;
      }
      bool pick0 = v0 && (!v2 || n0 <= n2);
      int n = pick0 ? n0 : n2;
      add({ConfigType::cfg13, {cell, n}, {{n, seg(pick0 ? walk[0] : walk[2])}}, std::nullopt, src});
    } else {
      failure(src + ": inner segment on an edge with " + std::to_string(k) + " crossings");
    }
  }

  void from_xpent(int cell) {
    const auto& walk = a_.cells()[cell].darts;
    auto vtri_trail = [&](int i) {
      int d = walk[(i + 5) % 5];
      const Trail& t = a_.trails()[a_.trail_of_segment(seg(d))];
      return t.length() == 2 && a_.type(a_.trail_far_end(seg(d), cell)) == CellType::vtri;
    };
    for (int i = 0; i < 5; ++i) {
      if (!vtri_trail(i - 1) || !vtri_trail(i) || !vtri_trail(i + 1)) continue;
      int c1 = face(map_.rot_next(map_.rot_next(walk[i])));
      int c2 = face(map_.rot_next(map_.rot_next(walk[(i + 1) % 5])));
      const std::string& e = map_.segment(seg(walk[i])).edge;
      if (a_.type(c1) != CellType::vvtri || a_.type(c2) != CellType::vvtri || a_.crossings_on_edge(e) != 2) {
        failure(cell_name(cell) + ": saturated XPENT without the two VVTRI corners at side " + std::to_string(i));
        return;
      }
      add({ConfigType::cfg15, {cell, c1, c2}, {}, e, cell_name(cell)});
      return;
    }
    failure(cell_name(cell) + ": saturated XPENT without three consecutive VTRI trails");
  }

  const Arrangement& a_;
  const CombMap& map_;
  bool strict_;
  ConfigCensus out_;
};

}  // namespace

ConfigCensus detect_configurations(const Arrangement& arrangement, bool saturated) {
  return Detector(arrangement, saturated).run();
}

std::int64_t CensusCounts::cells_of(CellType t) const {
  auto it = cell_counts.find(t);
  return it == cell_counts.end() ? 0 : it->second;
}

namespace var {

std::string trail(CellType a, CellType b) {
  auto p = trail_pair(a, b);
  return "T(" + std::string(name(p.first)) + "," + std::string(name(p.second)) + ")";
}

std::string cells(CellType t) { return "#" + std::string(name(t)); }

std::string config(ConfigType t) { return "#" + std::string(name(t)); }

}  // namespace var

std::map<std::string, std::int64_t> CensusCounts::variables() const {
  std::map<std::string, std::int64_t> v;
  v[var::kV] = stats.n;
  v[var::kVminus2] = stats.n - 2;
  v[var::kE] = stats.edges;
  v[var::kX] = stats.crossings;
  v[var::kE0] = stats.by_crossings[0];
  v[var::kE1] = stats.by_crossings[1];
  v[var::kE2] = stats.by_crossings[2];
  v[var::kE3] = stats.by_crossings[3];
  v[var::kEx] = stats.crossed_edges;
  for (CellType t : {CellType::xtri, CellType::xquad, CellType::vtri, CellType::vquad, CellType::xpent,
                     CellType::vvtri, CellType::kite, CellType::large, CellType::other}) {
    v[var::cells(t)] = cells_of(t);
  }
  v[var::kLargeSizeSum] = large_size_sum;
  for (std::size_t i = 0; i < kTrailTypes.size(); ++i) {
    for (std::size_t j = i; j < kTrailTypes.size(); ++j) {
      v[var::trail(kTrailTypes[i], kTrailTypes[j])] = trails.get(kTrailTypes[i], kTrailTypes[j]);
    }
  }
  for (ConfigType t : kConfigTypes) {
    auto it = configurations.find(t);
    v[var::config(t)] = it == configurations.end() ? 0 : it->second;
  }
  return v;
}

CensusCounts census(const Arrangement& a, bool saturated) {
  CensusCounts out;
  out.stats = stats(a.drawing());
  out.saturated = saturated;
  for (CellType t : {CellType::xtri, CellType::xquad, CellType::vtri, CellType::vquad, CellType::xpent,
                     CellType::vvtri, CellType::kite, CellType::large, CellType::other}) {
    out.cell_counts[t] = 0;
  }
  for (const auto& c : a.cells()) {
    CellType t = a.type(c.id);
    if (is_large(t)) {
      ++out.cell_counts[CellType::large];
      out.large_size_sum += c.size;
    }
    if (t != CellType::large) ++out.cell_counts[t];
    out.size_sum += c.size;
  }
  out.cell_count = static_cast<std::int64_t>(a.cells().size());
  out.trails = trail_counts(a.trails());
  for (const auto& t : a.trails()) out.interior_segment_total += static_cast<std::int64_t>(t.interior_segments.size());
  for (std::size_t c = 0; c < a.cells().size(); ++c) {
    if (a.type(static_cast<int>(c)) == CellType::xpent && is_saturated_xpent(a, static_cast<int>(c))) {
      ++out.saturated_xpents;
    }
  }
  ConfigCensus cfg = detect_configurations(a, saturated);
  for (ConfigType t : kConfigTypes) out.configurations[t] = cfg.count(t);
  out.configurations_exact = cfg.complete;
  return out;
}

CensusCounts census(const Drawing& drawing) {
  bool saturated = is_3saturated(drawing);
  return census(Arrangement(drawing), saturated);
}

}  // namespace threeplane
