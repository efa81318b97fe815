#include "threeplane/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "threeplane/errors.hpp"

namespace threeplane {

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

std::string id2(const std::string& prefix, int a, int b) {
  return prefix + std::to_string(a) + "_" + std::to_string(b);
}

struct ChordLayout {
  std::vector<EdgeRecord> edges;
  std::map<std::string, std::vector<DartKey>> crossing_rotations;
  std::vector<std::vector<std::pair<Point, DartKey>>> at_corner;  // per walk position
};

// Straight chords between template corners Q_i = (i, -i^2), which run
// clockwise so the face interior is on the right of the walk.
ChordLayout layout_chords(const std::vector<std::string>& corners, std::vector<std::pair<int, int>> chords,
                          const std::string& prefix) {
  const int k = static_cast<int>(corners.size());
  std::vector<Point> q;
  for (int i = 0; i < k; ++i) q.push_back(pt(i, -static_cast<long>(i) * i));
  for (auto& c : chords) {
    if (c.first > c.second) std::swap(c.first, c.second);
  }
  std::sort(chords.begin(), chords.end());

  struct Hit {
    Rational t;
    std::string id;
  };
  std::vector<std::vector<Hit>> hits(chords.size());
  std::set<Point> points;
  int next = 0;
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      const Point &p = q[chords[a].first], &p2 = q[chords[a].second];
      const Point &r = q[chords[b].first], &r2 = q[chords[b].second];
      if (!properly_cross(p, p2, r, r2)) continue;
      Rational ta = crossing_parameter(p, p2, r, r2);
      Rational tb = crossing_parameter(r, r2, p, p2);
      Point at{p.x + ta * (p2.x - p.x), p.y + ta * (p2.y - p.y)};
      if (!points.insert(at).second) throw InvariantViolation("chord template has three concurrent chords");
      std::string id = prefix + "x" + std::to_string(next++);
      hits[a].push_back({ta, id});
      hits[b].push_back({tb, id});
    }
  }

  ChordLayout out;
  out.at_corner.resize(k);
  for (std::size_t c = 0; c < chords.size(); ++c) {
    auto [i, j] = chords[c];
    std::string id = prefix + "d" + std::to_string(c);
    auto& h = hits[c];
    std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    EdgeRecord rec{id, {corners[i], corners[j]}, {}};
    for (const auto& hit : h) rec.crossings.push_back(hit.id);
    Point fwd{q[j].x - q[i].x, q[j].y - q[i].y};
    Point bwd{q[i].x - q[j].x, q[i].y - q[j].y};
    out.at_corner[i].push_back({fwd, {id, 0, Direction::forward}});
    out.at_corner[j].push_back({bwd, {id, static_cast<int>(h.size()), Direction::backward}});
    out.edges.push_back(std::move(rec));
  }

  std::map<std::string, std::vector<std::pair<Point, DartKey>>> spokes;
  for (std::size_t c = 0; c < chords.size(); ++c) {
    auto [i, j] = chords[c];
    Point fwd{q[j].x - q[i].x, q[j].y - q[i].y};
    Point bwd{q[i].x - q[j].x, q[i].y - q[j].y};
    const auto& rec = out.edges[c];
    for (int s = 0; s < static_cast<int>(rec.crossings.size()); ++s) {
      spokes[rec.crossings[s]].push_back({bwd, {rec.id, s, Direction::backward}});
      spokes[rec.crossings[s]].push_back({fwd, {rec.id, s + 1, Direction::forward}});
    }
  }
  for (auto& [x, list] : spokes) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    auto& rot = out.crossing_rotations[x];
    for (const auto& s : list) rot.push_back(s.second);
  }
  for (int i = 0; i < k; ++i) {
    const Point& prev = q[(i + k - 1) % k];
    Point ref{prev.x - q[i].x, prev.y - q[i].y};
    std::sort(out.at_corner[i].begin(), out.at_corner[i].end(),
              [&](const auto& a, const auto& b) { return angle_less_from(ref, a.first, b.first); });
  }
  return out;
}

}  // namespace

Drawing add_face_chords(const Drawing& plane_in, const std::vector<FaceChords>& plan) {
  Drawing out = canonical(plane_in);
  for (const auto& e : out.edges) {
    if (!e.crossings.empty()) throw PreconditionError("add_face_chords: skeleton must be uncrossed");
  }
  CombMap map = planarize(out);
  FaceSet faces = compute_faces(map);

  for (std::size_t f = 0; f < plan.size(); ++f) {
    const auto& p = plan[f];
    int match = -1;
    for (std::size_t w = 0; w < faces.walks.size(); ++w) {
      const auto& darts = faces.walks[w].darts;
      if (darts.size() != p.face.size()) continue;
      std::set<std::string> tails;
      for (int d : darts) tails.insert(map.node(map.tail(d)).id);
      if (tails == p.face) {
        if (match >= 0) throw PreconditionError("add_face_chords: face is not unique");
        match = static_cast<int>(w);
      }
    }
    if (match < 0) throw PreconditionError("add_face_chords: no face with the requested vertices");
    const auto& walk = faces.walks[match].darts;
    const int k = static_cast<int>(walk.size());
    std::vector<std::string> corners;
    std::map<std::string, int> position;
    for (int i = 0; i < k; ++i) {
      corners.push_back(map.node(map.tail(walk[i])).id);
      position[corners.back()] = i;
    }
    auto adjacent = [&](int i, int j) { return (i + 1) % k == j || (j + 1) % k == i; };
    std::set<std::pair<int, int>> omit;
    for (const auto& [a, b] : p.omit) omit.insert(std::minmax(position.at(a), position.at(b)));
    std::set<std::pair<int, int>> chords;
    if (p.all_diagonals) {
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (!adjacent(i, j) && !omit.count({i, j})) chords.insert({i, j});
        }
      }
    }
    for (const auto& [a, b] : p.chords) {
      auto c = std::minmax(position.at(a), position.at(b));
      if (adjacent(c.first, c.second) || c.first == c.second) {
        throw PreconditionError("add_face_chords: chord " + a + "-" + b + " is not a diagonal");
      }
      chords.insert(c);
    }

    ChordLayout layout = layout_chords(corners, {chords.begin(), chords.end()}, "f" + std::to_string(f));
    for (auto& e : layout.edges) out.edges.push_back(std::move(e));
    for (auto& [x, rot] : layout.crossing_rotations) out.rotations[x] = std::move(rot);
    for (int i = 0; i < k; ++i) {
      auto& rot = out.rotations[corners[i]];
      auto it = std::find(rot.begin(), rot.end(), map.key(walk[i]));
      std::vector<DartKey> fresh;
      for (const auto& s : layout.at_corner[i]) fresh.push_back(s.second);
      rot.insert(it, fresh.begin(), fresh.end());
    }
  }
  out.canonicalize();
  return out;
}

Drawing gen_fig3(int layers) {
  if (layers < 1) throw PreconditionError("gen_fig3: needs at least one layer");
  const int L = layers;
  const long hx[6] = {2, 1, -1, -2, -1, 1};
  const long hy[6] = {0, 2, 2, 0, -2, -2};
  auto a = [](int j, int k) { return id2("a", j, ((k % 6) + 6) % 6); };

  GeometricScene skeleton;
  for (int j = 0; j <= L; ++j) {
    for (int k = 0; k < 6; ++k) skeleton.points[a(j, k)] = pt((j + 1) * hx[k], (j + 1) * hy[k]);
    for (int k = 0; k < 6; ++k) skeleton.segments.push_back({id2("r", j, k), a(j, k), a(j, k + 1)});
  }
  for (int j = 0; j < L; ++j) {
    for (int k = j % 2; k < 6; k += 2) skeleton.segments.push_back({id2("c", j, k), a(j, k), a(j + 1, k)});
  }

  std::vector<FaceChords> plan;
  auto cap = [&](int j) {
    FaceChords fc;
    for (int k = 0; k < 6; ++k) fc.face.insert(a(j, k));
    for (int k = 0; k < 6; ++k) fc.chords.push_back({a(j, k), a(j, k + 2)});
    return fc;
  };
  plan.push_back(cap(0));
  plan.push_back(cap(L));
  for (int j = 0; j < L; ++j) {
    for (int s = j % 2; s < 6; s += 2) {
      FaceChords fc;
      for (int t = 0; t < 3; ++t) {
        fc.face.insert(a(j, s + t));
        fc.face.insert(a(j + 1, s + t));
      }
      fc.all_diagonals = true;
      fc.omit.push_back({a(j, s + 1), a(j + 1, s + 1)});
      plan.push_back(std::move(fc));
    }
  }
  return add_face_chords(ingest_geometry(skeleton), plan);
}

Drawing gen_fig2(int rings) {
  if (rings < 1) throw PreconditionError("gen_fig2: needs at least one ring");
  const int R = rings;
  auto size = [](int r) { return (r % 2 == 1) ? 10 : 5; };
  auto c = [&](int r, int i) { return id2("c", r, ((i % size(r)) + size(r)) % size(r)); };

  GeometricScene skeleton;
  int offset = 0;  // in units of 36 degrees
  for (int r = 0; r <= R; ++r) {
    if (r > 0 && size(r - 1) == 10) ++offset;
    const int step = size(r) == 5 ? 2 : 1;
    const double radius = 10.0 * (r + 1);
    for (int i = 0; i < size(r); ++i) {
      const double phi = M_PI / 2 + M_PI / 5 * (offset + step * i);
      skeleton.points[c(r, i)] = {Rational(std::lround(radius * std::cos(phi) * 1000), 1000),
                                  Rational(std::lround(radius * std::sin(phi) * 1000), 1000)};
      skeleton.segments.push_back({id2("r", r, i), c(r, i), c(r, i + 1)});
    }
    if (r == 0) continue;
    for (int i = 0; i < 5; ++i) {
      if (size(r - 1) == 5) {
        skeleton.segments.push_back({id2("k", r, i), c(r - 1, i), c(r, 2 * i)});
      } else {
        skeleton.segments.push_back({id2("k", r, i), c(r - 1, 2 * i + 1), c(r, i)});
      }
    }
  }

  std::vector<FaceChords> plan;
  auto pentagon = [&](std::vector<std::string> ids) {
    FaceChords fc;
    fc.face.insert(ids.begin(), ids.end());
    fc.all_diagonals = true;
    plan.push_back(std::move(fc));
  };
  pentagon({c(0, 0), c(0, 1), c(0, 2), c(0, 3), c(0, 4)});
  for (int r = 1; r <= R; ++r) {
    for (int i = 0; i < 5; ++i) {
      if (size(r - 1) == 5) {
        pentagon({c(r - 1, i), c(r - 1, i + 1), c(r, 2 * i), c(r, 2 * i + 1), c(r, 2 * i + 2)});
      } else {
        pentagon({c(r - 1, 2 * i + 1), c(r - 1, 2 * i + 2), c(r - 1, 2 * i + 3), c(r, i), c(r, i + 1)});
      }
    }
  }
  if (size(R) == 5) pentagon({c(R, 0), c(R, 1), c(R, 2), c(R, 3), c(R, 4)});
  return add_face_chords(ingest_geometry(skeleton), plan);
}

const std::vector<std::string>& basic_names() {
  static const std::vector<std::string> names{"k2", "k3", "path3", "x1", "fig3a-micro", "fig4-flower", "lens-bad"};
  return names;
}

namespace {

GeometricScene fig3a_scene() {
  // Five lines around a pentagon; the lines through sides 4 and 1 are long
  // enough to cross beyond side 0, every other side line stops short of the tips.
  const Point p[5] = {pt(0, 10), pt(10, 3), pt(6, -8), pt(-6, -8), pt(-10, 3)};
  auto along = [&](int j, const Rational& lambda) {
    const Point& a = p[j];
    const Point& b = p[(j + 1) % 5];
    return Point{a.x + lambda * (b.x - a.x), a.y + lambda * (b.y - a.y)};
  };
  Rational tip4 = crossing_parameter(p[4], p[0], p[1], p[2]);
  Rational tip1 = crossing_parameter(p[1], p[2], p[4], p[0]);
  GeometricScene s;
  for (int j = 0; j < 5; ++j) {
    Rational lo(-1, 4), hi(5, 4);
    if (j == 4) hi = tip4 + Rational(1, 4);
    if (j == 1) lo = tip1 - Rational(1, 4);
    std::string a = "a" + std::to_string(j), b = "b" + std::to_string(j);
    s.points[a] = along(j, lo);
    s.points[b] = along(j, hi);
    s.segments.push_back({"l" + std::to_string(j), a, b});
  }
  return s;
}

}  // namespace

Drawing gen_basic(const std::string& name) {
  if (name == "k2") {
    Drawing d;
    d.vertices = {"a", "b"};
    d.edges = {{"ab", {"a", "b"}, {}}};
    d.rotations["a"] = {{"ab", 0, Direction::forward}};
    d.rotations["b"] = {{"ab", 0, Direction::backward}};
    return d;
  }
  if (name == "k3") {
    GeometricScene s;
    s.points = {{"a", pt(0, 0)}, {"b", pt(4, 0)}, {"c", pt(0, 4)}};
    s.segments = {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ac", "a", "c"}};
    return ingest_geometry(s);
  }
  if (name == "path3") {
    GeometricScene s;
    s.points = {{"u", pt(0, 0)}, {"v", pt(4, 0)}, {"w", pt(2, 3)}};
    s.segments = {{"uv", "u", "v"}, {"vw", "v", "w"}};
    return ingest_geometry(s);
  }
  if (name == "x1") {
    GeometricScene s;
    s.points = {{"a", pt(0, 0)}, {"b", pt(4, 0)}, {"c", pt(4, 4)}, {"d", pt(0, 4)}};
    s.segments = {{"ac", "a", "c"}, {"bd", "b", "d"}};
    return ingest_geometry(s);
  }
  if (name == "fig3a-micro") return ingest_geometry(fig3a_scene());
  if (name == "fig4-flower") {
    GeometricScene s;
    const Point p[5] = {pt(0, 10), pt(10, 3), pt(6, -8), pt(-6, -8), pt(-10, 3)};
    for (int i = 0; i < 5; ++i) s.points["p" + std::to_string(i)] = p[i];
    for (int i = 0; i < 5; ++i) {
      std::string a = "p" + std::to_string(i);
      s.segments.push_back({"side" + std::to_string(i), a, "p" + std::to_string((i + 1) % 5)});
      s.segments.push_back({"diag" + std::to_string(i), a, "p" + std::to_string((i + 2) % 5)});
    }
    return ingest_geometry(s);
  }
  if (name == "lens-bad") {
    Drawing k3 = gen_basic("k3");
    CombMap map = planarize(k3);
    FaceSet faces = compute_faces(map);
    const auto& walk = faces.walks[0];
    std::size_t ua = 0, ub = 0;
    for (std::size_t i = 0; i < walk.darts.size(); ++i) {
      const auto& id = map.node(map.tail(walk.darts[i])).id;
      if (id == "a") ua = i;
      if (id == "b") ub = i;
    }
    CombMap grown = insert_edge_in_face(map, walk, ua, ub, "ab2");
    k3.edges.push_back({"ab2", {"a", "b"}, {}});
    k3.rotations = grown.rotation_table();
    return canonical(k3);
  }
  throw PreconditionError("unknown basic drawing '" + name + "'");
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound) by rejection, independent of library distributions.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct Builder {
  const std::vector<Point>& points;
  std::vector<std::pair<int, int>> accepted;
  std::vector<int> crossings;
  std::set<Point> crossing_points;

  bool try_add(int u, int v) {
    const Point& a = points[u];
    const Point& b = points[v];
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (static_cast<int>(p) != u && static_cast<int>(p) != v && on_open_segment(points[p], a, b)) return false;
    }
    std::vector<std::size_t> crossed;
    std::set<Point> fresh;
    for (std::size_t s = 0; s < accepted.size(); ++s) {
      const Point& c = points[accepted[s].first];
      const Point& d = points[accepted[s].second];
      if (collinear_overlap(a, b, c, d)) return false;
      if (!properly_cross(a, b, c, d)) continue;
      Rational t = crossing_parameter(a, b, c, d);
      Point at{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (crossing_points.count(at) || !fresh.insert(at).second) return false;
      if (crossings[s] >= 3) return false;
      crossed.push_back(s);
    }
    if (crossed.size() > 3) return false;
    for (std::size_t s : crossed) ++crossings[s];
    crossing_points.insert(fresh.begin(), fresh.end());
    accepted.push_back({u, v});
    crossings.push_back(static_cast<int>(crossed.size()));
    return true;
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

GeometricScene random_scene(int n, int edge_budget, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("random_drawing: needs n >= 3");
  Rng rng(seed);
  const std::uint64_t grid = 16 * static_cast<std::uint64_t>(n);
  const int budget = std::max(0, edge_budget);
  for (int attempt = 0;; ++attempt) {
    std::vector<Point> points;
    std::set<Point> used;
    while (static_cast<int>(points.size()) < n) {
      Point p = pt(static_cast<long>(rng.below(grid)), static_cast<long>(rng.below(grid)));
      if (used.insert(p).second) points.push_back(p);
    }
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) candidates.push_back({i, j});
    }
    rng.shuffle(candidates);

    Builder b{points, {}, {}, {}};
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> taken(candidates.size(), 0);
    int components = n;
    for (std::size_t c = 0; c < candidates.size() && static_cast<int>(b.accepted.size()) < budget; ++c) {
      auto [u, v] = candidates[c];
      int ru = find_root(parent, u), rv = find_root(parent, v);
      if (ru == rv || !b.try_add(u, v)) continue;
      parent[ru] = rv;
      --components;
      taken[c] = 1;
    }
    if (components > 1 && budget >= n - 1 && attempt < 64) continue;
    for (std::size_t c = 0; c < candidates.size() && static_cast<int>(b.accepted.size()) < budget; ++c) {
      if (!taken[c]) b.try_add(candidates[c].first, candidates[c].second);
    }

    GeometricScene scene;
    for (int i = 0; i < n; ++i) scene.points["v" + std::to_string(i)] = points[i];
    for (std::size_t e = 0; e < b.accepted.size(); ++e) {
      scene.segments.push_back({"e" + std::to_string(e), "v" + std::to_string(b.accepted[e].first),
                                "v" + std::to_string(b.accepted[e].second)});
    }
    return scene;
  }
}

Drawing random_drawing(int n, int edge_budget, std::uint64_t seed) {
  return ingest_geometry(random_scene(n, edge_budget, seed));
}

}  // namespace threeplane
