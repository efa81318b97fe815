#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "threeplane/drawing.hpp"
#include "threeplane/generators.hpp"
#include "threeplane/geometry.hpp"

namespace testing_support {

struct Pt {
  const char* id;
  long x;
  long y;
};

struct Seg {
  const char* id;
  const char* u;
  const char* v;
};

inline threeplane::GeometricScene scene(const std::vector<Pt>& points, const std::vector<Seg>& segments) {
  threeplane::GeometricScene s;
  for (const auto& p : points) s.points[p.id] = {threeplane::Rational(p.x), threeplane::Rational(p.y)};
  for (const auto& g : segments) s.segments.push_back({g.id, g.u, g.v});
  return s;
}

inline threeplane::Drawing drawing(const std::vector<Pt>& points, const std::vector<Seg>& segments) {
  return threeplane::ingest_geometry(scene(points, segments));
}

// Plane K4: triangle a, b, c around the inner vertex d.
inline threeplane::Drawing k4() {
  return drawing({{"a", 0, 0}, {"b", 6, 0}, {"c", 3, 6}, {"d", 3, 2}},
                 {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}, {"ad", "a", "d"}, {"bd", "b", "d"},
                  {"cd", "c", "d"}});
}

inline threeplane::Drawing square() {
  return drawing({{"a", 0, 0}, {"b", 4, 0}, {"c", 4, 4}, {"d", 0, 4}},
                 {{"ab", "a", "b"}, {"bc", "b", "c"}, {"cd", "c", "d"}, {"da", "d", "a"}});
}

inline threeplane::Drawing two_triangles() {
  return drawing({{"a", 0, 0}, {"b", 2, 0}, {"c", 1, 2}, {"d", 10, 0}, {"e", 12, 0}, {"f", 11, 2}},
                 {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}, {"de", "d", "e"}, {"ef", "e", "f"},
                  {"fd", "f", "d"}});
}

// One edge crossed three times by three disjoint edges.
inline threeplane::Drawing triple_crossed() {
  return drawing({{"u", 0, 0}, {"v", 8, 0}, {"p1", 2, -2}, {"q1", 2, 2}, {"p2", 4, -2}, {"q2", 4, 2},
                  {"p3", 6, -2}, {"q3", 6, 2}},
                 {{"uv", "u", "v"}, {"e1", "p1", "q1"}, {"e2", "p2", "q2"}, {"e3", "p3", "q3"}});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string data_path(const std::string& name) { return std::string(THREEPLANE_TEST_DATA) + "/" + name; }

// Corpus of small, structured and random drawings used by the identity checks.
inline std::vector<std::pair<std::string, threeplane::Drawing>> corpus(int random_count) {
  using namespace threeplane;
  std::vector<std::pair<std::string, Drawing>> out;
  for (const auto& name : basic_names()) out.emplace_back("basic " + name, gen_basic(name));
  for (int r = 1; r <= 2; ++r) out.emplace_back("fig2 R=" + std::to_string(r), gen_fig2(r));
  for (int l = 1; l <= 4; ++l) out.emplace_back("fig3 L=" + std::to_string(l), gen_fig3(l));
  for (int s = 0; s < random_count; ++s) {
    const int n = 6 + s % 9;
    out.emplace_back("random seed " + std::to_string(s), random_drawing(n, 4 * n, static_cast<std::uint64_t>(s)));
  }
  return out;
}

}  // namespace testing_support
