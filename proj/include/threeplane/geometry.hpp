#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "threeplane/drawing.hpp"
#include "threeplane/rational.hpp"

namespace threeplane {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct SceneSegment {
  std::string id;
  std::string u;
  std::string v;
};

struct GeometricScene {
  std::map<std::string, Point> points;
  std::vector<SceneSegment> segments;
};

Rational cross(const Point& a, const Point& b);
// Twice the signed area of (a, b, c); positive for a left turn.
Rational orient(const Point& a, const Point& b, const Point& c);
// Counterclockwise angular order of direction vectors, starting at the positive x axis.
bool angle_less(const Point& a, const Point& b);
// Counterclockwise angular order of directions measured from `reference` (exclusive).
bool angle_less_from(const Point& reference, const Point& a, const Point& b);

// True when p lies on segment ab strictly between a and b.
bool on_open_segment(const Point& p, const Point& a, const Point& b);
// Proper crossing of the relative interiors of ab and cd.
bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);
// For properly crossing segments, the parameter t with a + t (b - a) on cd.
Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d);
bool collinear_overlap(const Point& a, const Point& b, const Point& c, const Point& d);

// Straight-line scene to combinatorial drawing. Throws GeometryError with one
// of: unknown-point, degenerate-segment, duplicate-id, coincident-points,
// vertex-on-edge, collinear-overlap, adjacent-crossing, concurrent-crossing,
// too-many-crossings.
Drawing ingest_geometry(const GeometricScene& scene);

GeometricScene parse_scene(std::string_view text);
std::string serialize_scene(const GeometricScene& scene);

}  // namespace threeplane
