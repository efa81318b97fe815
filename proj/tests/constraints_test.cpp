#include <set>

#include "doctest.h"
#include "oracle/oracles.hpp"
#include "support.hpp"
#include "threeplane/census.hpp"
#include "threeplane/constraints.hpp"
#include "threeplane/errors.hpp"
#include "threeplane/generators.hpp"
#include "threeplane/report.hpp"
#include "threeplane/saturate.hpp"

using namespace threeplane;
using namespace testing_support;

TEST_SUITE("constraints") {
  TEST_CASE("row table") {
    const auto& rows = constraint_rows();
    std::vector<std::string> ids;
    int equalities = 0;
    for (const auto& r : rows) {
      ids.push_back(r.id);
      if (r.relation == Relation::equal) ++equalities;
    }
    CHECK(ids == std::vector<std::string>{"2.A", "2.B", "2.C", "2.D", "3.A", "3.B", "3.C", "3.D", "3.E", "4.A", "4.B",
                                          "5.A", "5.B", "6", "7", "8.A", "8.B", "8.C", "9.A", "9.B", "9.C"});
    CHECK(equalities == 7);
    std::set<std::string> any{"6", "7", "8.A", "8.B", "8.C", "9.A", "9.B", "9.C"};
    for (const auto& r : rows) CHECK((r.scope == Scope::any) == (any.count(r.id) == 1));
    CHECK(to_string(constraint_row("3.E").lhs) == "2*T(VTRI,VQUAD)");
    CHECK(constraint_row("5.B").rhs == LinearForm("|V|-2", 30));
    CHECK_THROWS(constraint_row("10"));
  }

  TEST_CASE("density formula on small drawings at t = 5") {
    CHECK(density_residual(gen_basic("k3"), 5) == 0);
    CHECK(density_residual(gen_basic("k2"), 5) == 0);
    CHECK(density_residual(gen_basic("x1"), 5) == 0);
  }

  TEST_CASE("density formula is affine-zero in t") {
    for (const auto& [name, d] : corpus(20)) {
      CAPTURE(name);
      for (int t : {1, 2, 5}) {
        CHECK(density_residual(d, t) == 0);
        CHECK(oracle::density_residual(d, t) == 0);
      }
      CHECK(density_residual(d, Rational(7, 3)) == 0);
    }
  }

  TEST_CASE("density formula needs an edge") {
    Drawing lonely;
    lonely.vertices = {"a"};
    CHECK_THROWS_AS(density_residual(lonely, 5), PreconditionError);
  }

  TEST_CASE("plane triangle passes the unscoped rows") {
    ConstraintReport r = evaluate_constraints(census(gen_basic("k3")), false);
    for (const char* id : {"6", "7", "8.A", "8.B", "9.A", "9.B", "9.C"}) {
      CAPTURE(id);
      CHECK(r.row(id).applicable);
      CHECK(r.row(id).pass);
    }
    CHECK_FALSE(r.row("2.A").applicable);
    CHECK_FALSE(r.row("5.B").applicable);
    CHECK(r.all_applicable_pass());
  }

  TEST_CASE("fig3 with two layers passes every row") {
    ConstraintReport r = evaluate_constraints(census(saturate(gen_fig3(2))), true);
    for (const auto& row : r.rows) {
      CAPTURE(row.id);
      CHECK(row.applicable);
      CHECK(row.pass);
    }
    for (const auto& row : r.sanity) CHECK(row.pass);
    CHECK(r.all_applicable_pass());
    nlohmann::json expected = nlohmann::json::parse(read_file(data_path("fig3_L2_check.json")));
    CHECK(to_json(r) == expected);
  }

  TEST_CASE("evaluator reports a broken equality with signed slack") {
    CensusCounts c;
    c.stats.n = 3;
    c.stats.edges = 1;
    c.stats.by_crossings[1] = 1;
    c.stats.crossed_edges = 1;
    c.stats.crossings = 0;
    ConstraintReport r = evaluate_constraints(c, false);
    const RowResult& row = r.row("8.B");
    CHECK_FALSE(row.pass);
    CHECK(row.lhs == 1);
    CHECK(row.rhs == 0);
    CHECK(row.slack == -1);
    CHECK_FALSE(r.all_applicable_pass());
  }

  TEST_CASE("rows off scope are reported but not judged") {
    RowResult r = evaluate_row(constraint_row("3.A"), census(gen_basic("x1")).variables(), false);
    CHECK_FALSE(r.applicable);
    CHECK(r.scope == Scope::saturated);
  }

  TEST_CASE("five-vertex drawing where the vtri-vquad row fails") {
    Drawing d = saturate(ingest_geometry(parse_scene(read_file(data_path("vtri_vquad_witness.scene.json")))));
    REQUIRE(is_3saturated(d));
    CensusCounts c = census(d);
    REQUIRE(c.configurations_exact);
    ConstraintReport r = evaluate_constraints(c, true);
    const RowResult& row = r.row("3.E");
    CHECK(row.lhs == 4);
    CHECK(row.rhs == 2);
    CHECK_FALSE(row.pass);
    for (const auto& other : r.rows) {
      if (other.id != "3.E") CHECK(other.pass);
    }

    Arrangement a(d);
    std::int64_t trails = 0, cfg18 = 0;
    std::set<std::string> once_crossed_bounds;
    for (const auto& t : a.trails()) {
      if (trail_pair(t.endpoint_types[0], t.endpoint_types[1]) != trail_pair(CellType::vtri, CellType::vquad)) continue;
      ++trails;
      if (t.length() == 3) ++cfg18;
      bool once = false;
      for (const auto& e : t.bounding_edges) {
        if (d.find_edge(e)->crossings.size() == 1) {
          once = true;
          once_crossed_bounds.insert(e);
        }
      }
      CHECK((once || t.length() == 3));
    }
    const std::int64_t e1 = c.stats.by_crossings[1];
    CHECK(trails == 2);
    CHECK(static_cast<std::int64_t>(once_crossed_bounds.size()) == e1);
    CHECK(trails <= 2 * e1 + cfg18);
  }
}
