#include "doctest.h"

#include "common.hpp"
#include "starlike/bracket.hpp"
#include "starlike/homology.hpp"
#include "starlike/json_io.hpp"

using namespace starlike;

TEST_SUITE("json_io") {

TEST_CASE("diagram round trip") {
  for (const char* name : {"unknot", "positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    CHECK(parse_diagram(to_json(d).dump()) == d);
  }
}

TEST_CASE("polynomials") {
  CHECK(to_json(Laurent::circle_value()).dump() == "[[-2,-1],[2,-1]]");
  CHECK(to_json(v_st(LinkDiagram::unknot())).dump() == R"j([["( )",[[0,1]]]])j");
}

TEST_CASE("tables") {
  HomologyTable t{{{-3, -7, 0}, {0, {2}}}};
  CHECK(to_json(t).dump() == R"([{"i":-3,"j":-7,"k":0,"rank":0,"torsion":[2]}])");
  BigradedTable b{{{0, 1}, {1, {}}}};
  CHECK(to_json(b).dump() == R"([{"i":0,"q":1,"rank":1,"torsion":[]}])");
}

TEST_CASE("moves") {
  MoveSite m{MoveKind::R2Insert, {1, 4}, {}, {}, true, 1};
  CHECK(move_from_json(to_json(m)) == m);
  MoveSite k{MoveKind::R1Pair, {0}, {}, {{1, Side::Left}, {-1, Side::Right}}, false, 0};
  CHECK(move_from_json(to_json(k)) == k);
  CHECK_THROWS_AS(move_from_json(Json::parse(R"({"kind":"R9"})")), Error);
}

TEST_CASE("duality report") {
  DualityReport r;
  r.checks.push_back({"x", false, "why"});
  Json j = to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["checks"][0]["detail"] == "why");
}

}
