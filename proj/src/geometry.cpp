#include "threeplane/geometry.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "threeplane/errors.hpp"

namespace threeplane {

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

Point minus(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

int upper_half(const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

int sign(const Rational& r) { return sgn(r); }

}  // namespace

bool angle_less(const Point& a, const Point& b) {
  int ha = upper_half(a), hb = upper_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool angle_less_from(const Point& reference, const Point& a, const Point& b) {
  auto half = [&](const Point& d) {
    Rational c = cross(reference, d);
    Rational dot = reference.x * d.x + reference.y * d.y;
    return (c > 0 || (c == 0 && dot > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  Rational dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot > 0 && dot < len;
}

bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return sign(orient(a, b, c)) * sign(orient(a, b, d)) < 0 && sign(orient(c, d, a)) * sign(orient(c, d, b)) < 0;
}

Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d) {
  Rational oa = orient(c, d, a);
  Rational ob = orient(c, d, b);
  return oa / (oa - ob);
}

bool collinear_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (orient(a, b, c) != 0 || orient(a, b, d) != 0) return false;
  Point dir = minus(b, a);
  auto param = [&](const Point& p) -> Rational { return (p.x - a.x) * dir.x + (p.y - a.y) * dir.y; };
  Rational lo1 = 0, hi1 = param(b);
  Rational lo2 = std::min(param(c), param(d)), hi2 = std::max(param(c), param(d));
  return std::min(hi1, hi2) > std::max(lo1, lo2);
}

Drawing ingest_geometry(const GeometricScene& scene) {
  std::map<Point, std::string> seen_points;
  for (const auto& [id, p] : scene.points) {
    auto [it, fresh] = seen_points.emplace(p, id);
    if (!fresh) throw GeometryError("coincident-points", it->second + " and " + id);
  }
  std::set<std::string> ids;
  for (const auto& s : scene.segments) {
    if (!ids.insert(s.id).second) throw GeometryError("duplicate-id", s.id);
    if (!scene.points.count(s.u) || !scene.points.count(s.v)) throw GeometryError("unknown-point", s.id);
    if (s.u == s.v) throw GeometryError("degenerate-segment", s.id);
  }
  auto P = [&](const std::string& id) -> const Point& { return scene.points.at(id); };

  for (const auto& s : scene.segments) {
    for (const auto& [id, p] : scene.points) {
      if (id != s.u && id != s.v && on_open_segment(p, P(s.u), P(s.v))) {
        throw GeometryError("vertex-on-edge", id + " lies on " + s.id);
      }
    }
  }

  struct Hit {
    Rational t;
    std::string crossing;
  };
  std::vector<std::vector<Hit>> hits(scene.segments.size());
  struct Found {
    std::size_t i, j;
    Point at;
    Rational ti, tj;
  };
  std::vector<Found> found;
  for (std::size_t i = 0; i < scene.segments.size(); ++i) {
    const auto& a = scene.segments[i];
    for (std::size_t j = i + 1; j < scene.segments.size(); ++j) {
      const auto& b = scene.segments[j];
      if (collinear_overlap(P(a.u), P(a.v), P(b.u), P(b.v))) {
        throw GeometryError("collinear-overlap", a.id + " and " + b.id);
      }
      if (!properly_cross(P(a.u), P(a.v), P(b.u), P(b.v))) continue;
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        throw GeometryError("adjacent-crossing", a.id + " and " + b.id);
      }
      Rational ti = crossing_parameter(P(a.u), P(a.v), P(b.u), P(b.v));
      Rational tj = crossing_parameter(P(b.u), P(b.v), P(a.u), P(a.v));
      Point at{P(a.u).x + ti * (P(a.v).x - P(a.u).x), P(a.u).y + ti * (P(a.v).y - P(a.u).y)};
      found.push_back({i, j, at, ti, tj});
    }
  }

  std::map<Point, std::vector<std::size_t>> by_point;
  for (std::size_t k = 0; k < found.size(); ++k) by_point[found[k].at].push_back(k);
  for (const auto& [pt, list] : by_point) {
    if (list.size() > 1) {
      const auto& f = found[list[0]];
      const auto& g = found[list[1]];
      std::set<std::string> names{scene.segments[f.i].id, scene.segments[f.j].id, scene.segments[g.i].id,
                                  scene.segments[g.j].id};
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "" : ", ") + n;
      throw GeometryError("concurrent-crossing", joined);
    }
  }

  std::string prefix = "x";
  auto clashes = [&](const std::string& p) {
    for (const auto& [id, pt] : scene.points) {
      if (id.size() > p.size() && id.compare(0, p.size(), p) == 0 &&
          std::all_of(id.begin() + static_cast<long>(p.size()), id.end(), ::isdigit)) {
        return true;
      }
    }
    return false;
  };
  while (clashes(prefix)) prefix += "x";

  std::vector<std::size_t> order(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = found[a];
    const auto& fb = found[b];
    return std::tie(scene.segments[fa.i].id, scene.segments[fa.j].id) <
           std::tie(scene.segments[fb.i].id, scene.segments[fb.j].id);
  });
  std::vector<std::string> crossing_name(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& f = found[order[k]];
    crossing_name[order[k]] = prefix + std::to_string(k);
    hits[f.i].push_back({f.ti, crossing_name[order[k]]});
    hits[f.j].push_back({f.tj, crossing_name[order[k]]});
  }

  Drawing d;
  for (const auto& [id, p] : scene.points) d.vertices.push_back(id);
  std::map<std::string, std::vector<std::pair<Point, DartKey>>> spokes;
  for (std::size_t i = 0; i < scene.segments.size(); ++i) {
    const auto& s = scene.segments[i];
    auto& h = hits[i];
    if (h.size() > 3) throw GeometryError("too-many-crossings", s.id + " has " + std::to_string(h.size()));
    std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    EdgeRecord rec{s.id, {s.u, s.v}, {}};
    for (const auto& hit : h) rec.crossings.push_back(hit.crossing);
    d.edges.push_back(rec);

    Point forward = minus(P(s.v), P(s.u));
    Point backward = minus(P(s.u), P(s.v));
    int k = static_cast<int>(h.size());
    spokes[s.u].push_back({forward, {s.id, 0, Direction::forward}});
    spokes[s.v].push_back({backward, {s.id, k, Direction::backward}});
    for (int m = 0; m < k; ++m) {
      spokes[h[m].crossing].push_back({backward, {s.id, m, Direction::backward}});
      spokes[h[m].crossing].push_back({forward, {s.id, m + 1, Direction::forward}});
    }
  }
  for (auto& [node, list] : spokes) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    auto& rot = d.rotations[node];
    for (const auto& [dir, key] : list) rot.push_back(key);
  }
  d.canonicalize();
  return d;
}

GeometricScene parse_scene(std::string_view text) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw TdrSyntaxError(std::string("scene: ") + err.what(), 0, err.byte);
  }
  GeometricScene scene;
  try {
    for (const auto& [id, xy] : root.at("points").items()) {
      if (!xy.is_array() || xy.size() != 2) throw TdrSemanticError("point '" + id + "' needs two coordinates");
      scene.points[id] = {parse_rational(xy[0].get<std::string>()), parse_rational(xy[1].get<std::string>())};
    }
    for (const auto& s : root.at("segments")) {
      const auto& ends = s.at("ends");
      if (!ends.is_array() || ends.size() != 2) throw TdrSemanticError("segment needs two ends");
      scene.segments.push_back({s.at("id").get<std::string>(), ends[0].get<std::string>(), ends[1].get<std::string>()});
    }
  } catch (const json::exception& err) {
    throw TdrSemanticError(std::string("scene: ") + err.what());
  } catch (const std::invalid_argument& err) {
    throw TdrSemanticError(std::string("scene: ") + err.what());
  }
  return scene;
}

std::string serialize_scene(const GeometricScene& scene) {
  using nlohmann::json;
  json root;
  root["points"] = json::object();
  for (const auto& [id, p] : scene.points) root["points"][id] = {to_string(p.x), to_string(p.y)};
  root["segments"] = json::array();
  for (const auto& s : scene.segments) root["segments"].push_back({{"id", s.id}, {"ends", {s.u, s.v}}});
  return root.dump(2) + "\n";
}

}  // namespace threeplane
