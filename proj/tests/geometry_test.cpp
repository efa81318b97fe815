#include "doctest.h"
#include "oracle/oracles.hpp"
#include "support.hpp"
#include "threeplane/errors.hpp"
#include "threeplane/generators.hpp"
#include "threeplane/geometry.hpp"

using namespace threeplane;
using namespace testing_support;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

std::string rejection(const GeometricScene& s) {
  try {
    (void)ingest_geometry(s);
  } catch (const GeometryError& err) {
    return err.reason();
  }
  return "";
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("orientation and angular order") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) > 0);
    CHECK(orient(P(0, 0), P(1, 0), P(2, 0)) == 0);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) < 0);
    CHECK(angle_less(P(1, 0), P(0, 1)));
    CHECK(angle_less(P(0, 1), P(-1, 0)));
    CHECK(angle_less(P(-1, 0), P(0, -1)));
    CHECK_FALSE(angle_less(P(0, -1), P(1, 0)));
    CHECK(angle_less(P(1, 1), P(1, 2)));
    CHECK(angle_less_from(P(0, 1), P(-1, 0), P(1, 0)));
    CHECK_FALSE(angle_less_from(P(0, 1), P(1, 0), P(-1, 0)));
  }

  TEST_CASE("segment predicates") {
    CHECK(on_open_segment(P(1, 1), P(0, 0), P(2, 2)));
    CHECK_FALSE(on_open_segment(P(2, 2), P(0, 0), P(2, 2)));
    CHECK(properly_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
    CHECK_FALSE(properly_cross(P(0, 0), P(2, 2), P(2, 2), P(3, 0)));
    CHECK_FALSE(properly_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 3)));
    CHECK(crossing_parameter(P(0, 0), P(4, 0), P(1, -1), P(1, 1)) == Rational(1, 4));
    CHECK(collinear_overlap(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));
    CHECK_FALSE(collinear_overlap(P(0, 0), P(1, 0), P(1, 0), P(2, 0)));
    CHECK_FALSE(collinear_overlap(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  }

  TEST_CASE("square diagonals") {
    Drawing d = drawing({{"a", 0, 0}, {"b", 2, 0}, {"c", 2, 2}, {"d", 0, 2}}, {{"ac", "a", "c"}, {"bd", "b", "d"}});
    CHECK(d == gen_basic("x1"));
    CHECK(d.crossing_ids() == std::vector<std::string>{"x0"});
    CHECK(validate(d).valid());
  }

  TEST_CASE("crossing order follows the edge direction") {
    Drawing d = triple_crossed();
    const EdgeRecord* uv = d.find_edge("uv");
    REQUIRE(uv != nullptr);
    REQUIRE(uv->crossings.size() == 3);
    CHECK(d.find_edge("e1")->crossings[0] == uv->crossings[0]);
    CHECK(d.find_edge("e3")->crossings[0] == uv->crossings[2]);
  }

  TEST_CASE("rejections name their reason") {
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 4}, {"c", 0, 4}, {"d", 4, 0}, {"e", 2, 0}, {"f", 2, 4}},
                          {{"ab", "a", "b"}, {"cd", "c", "d"}, {"ef", "e", "f"}})) == "concurrent-crossing");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}}, {{"ab", "a", "b"}, {"ab2", "a", "b"}})) == "collinear-overlap");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}, {"c", 2, 0}, {"d", 6, 0}}, {{"ab", "a", "b"}, {"cd", "c", "d"}})) ==
          "vertex-on-edge");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}, {"c", 2, 0}, {"d", 2, 3}}, {{"ab", "a", "b"}, {"cd", "c", "d"}})) ==
          "vertex-on-edge");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}}, {{"aa", "a", "a"}})) == "degenerate-segment");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}}, {{"ab", "a", "z"}})) == "unknown-point");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 4, 0}}, {{"ab", "a", "b"}, {"ab", "b", "a"}})) == "duplicate-id");
    CHECK(rejection(scene({{"a", 0, 0}, {"b", 0, 0}, {"c", 1, 1}}, {{"ac", "a", "c"}})) == "coincident-points");
    CHECK(rejection(scene({{"u", 0, 0}, {"v", 10, 0}, {"p1", 1, -1}, {"q1", 1, 1}, {"p2", 3, -1}, {"q2", 3, 1},
                           {"p3", 5, -1}, {"q3", 5, 1}, {"p4", 7, -1}, {"q4", 7, 1}},
                          {{"uv", "u", "v"}, {"e1", "p1", "q1"}, {"e2", "p2", "q2"}, {"e3", "p3", "q3"},
                           {"e4", "p4", "q4"}})) == "too-many-crossings");
  }

  TEST_CASE("random scene seven against brute force") {
    GeometricScene s = random_scene(12, 40, 7);
    Drawing d = ingest_geometry(s);
    CHECK(static_cast<std::int64_t>(d.crossing_ids().size()) == oracle::brute_force_crossings(s));
    CHECK(validate(d).valid());
  }

  TEST_CASE("scene text round trip") {
    GeometricScene s;
    s.points["a"] = {Rational(1, 3), Rational(-2)};
    s.points["b"] = {Rational(5, 2), Rational(7, 9)};
    s.segments.push_back({"ab", "a", "b"});
    std::string text = serialize_scene(s);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    GeometricScene back = parse_scene(text);
    CHECK(back.points.at("a") == s.points.at("a"));
    CHECK(back.points.at("b") == s.points.at("b"));
    CHECK(serialize_scene(back) == text);
    CHECK_THROWS(parse_scene("{\"points\": {\"a\": [\"1/0\", \"2\"]}, \"segments\": []}"));
  }
}
