#include "doctest.h"

#include "common.hpp"
#include "starlike/error.hpp"

using namespace starlike;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << text);
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("shipped diagrams load") {
  CHECK(load("unknot").crossing_count() == 0);
  CHECK(load("unknot").free_loops() == 1);
  CHECK(load("positive_kink").crossing_count() == 1);
  CHECK(load("hopf").crossing_count() == 2);
  CHECK(link_components(load("hopf")).size() == 2);
  CHECK(writhe(load("trefoil")) == 3);
  CHECK(writhe(load("figure_eight")) == 0);
  CHECK(load("fig2").crossing_count() == 3);
}

TEST_CASE("PD text") {
  LinkDiagram d = parse_diagram("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.edge_count() == 6);
  CHECK(writhe(d) == 3);
  CHECK(faces(d).size() == 5);
  CHECK(diagram_hash(d) == diagram_hash(load("trefoil")));
}

TEST_CASE("input errors") {
  CHECK(code_of("{") == ErrorCode::MalformedInput);
  CHECK(code_of("X[1,2,3]") == ErrorCode::MalformedInput);
  CHECK(code_of(R"({"crossings":[{"sign":2,"slots":[0,1,1,0]}]})") == ErrorCode::MalformedInput);
  CHECK(code_of(R"({"crossings":[{"sign":1,"slots":[0,0,1,1],"slot_dirs":["in","in","out","out"]}]})") ==
        ErrorCode::SignMismatch);
  CHECK(code_of(R"({"crossings":[{"sign":1,"slots":[0,1,2,3]}]})") == ErrorCode::DisconnectedEdge);
  CHECK(code_of(R"({"crossings":[{"sign":1,"slots":[1,1,0,0]},{"sign":1,"slots":[3,3,2,2]}]})") ==
        ErrorCode::SplitDiagram);
  CHECK(code_of(R"({"crossings":[],"free_loops":-1})") == ErrorCode::MalformedInput);
}

TEST_CASE("rotation system must be planar") {
  // two crossings joined so that the faces do not close up on a sphere
  CHECK_THROWS_AS(LinkDiagram(std::vector<Crossing>{{1, {0, 3, 1, 2}}, {1, {2, 1, 3, 0}}}), Error);
}

TEST_CASE("canonical form ignores relabeling") {
  LinkDiagram d = load("figure_eight");
  LinkDiagram c = canonicalize(d);
  CHECK(canonical_form(c) == canonical_form(d));
  CHECK(canonicalize(c) == c);
  CHECK(diagram_hash(d).size() == 16);
  LinkDiagram relabeled = d.with_label_order({3, 2, 1, 0});
  CHECK(diagram_hash(relabeled) == diagram_hash(d));
}

TEST_CASE("mirror") {
  LinkDiagram d = load("trefoil");
  LinkDiagram m = mirror(d);
  CHECK(writhe(m) == -3);
  CHECK(mirror(m) == d);
  CHECK(writhe(flip_crossing(d, 0)) == 1);
  CHECK(faces(m).size() == faces(d).size());
}

TEST_CASE("faces satisfy Euler's formula") {
  for (const char* name : {"positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    CHECK(d.crossing_count() - d.edge_count() + static_cast<int>(faces(d).size()) == 2);
    int outer = 0;
    for (const Face& f : faces(d)) outer += f.outer;
    CHECK(outer == 1);
  }
}

}
