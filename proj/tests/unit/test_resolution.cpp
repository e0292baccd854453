#include "doctest.h"

#include "common.hpp"
#include "oracles.hpp"
#include "starlike/resolution.hpp"

using namespace starlike;

TEST_SUITE("resolution") {

TEST_CASE("state index round trip") {
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(index_of(smoothing_from_index(i, 4)) == i);
  auto s = smoothing_from_index(1, 3);
  CHECK(s[2] == Smoothing::Ainv);
  CHECK(s[0] == Smoothing::A);
}

TEST_CASE("Seifert smoothings") {
  CHECK(is_seifert(1, Smoothing::A));
  CHECK(!is_seifert(1, Smoothing::Ainv));
  CHECK(is_seifert(-1, Smoothing::Ainv));
}

TEST_CASE("positive kink states") {
  LinkDiagram d = load("positive_kink");
  KauffmanState seifert = resolve(d, {Smoothing::A});
  CHECK(seifert.circles.size() == 2);
  CHECK(seifert.sigma == 1);
  for (const auto& c : seifert.circles) {
    CHECK(c.seifert_points == 1);
    CHECK(c.type == CircleType::d);
  }
  KauffmanState other = resolve(d, {Smoothing::Ainv});
  CHECK(other.circles.size() == 1);
  CHECK(other.circles[0].break_points == 2);
  CHECK(other.circles[0].type == CircleType::d);
  CHECK(other.sigma == -1);
}

TEST_CASE("free loops are h-circles") {
  KauffmanState s = resolve(LinkDiagram::unknot(2), {});
  CHECK(s.count(CircleType::h) == 2);
  CHECK(nesting_forest(LinkDiagram::unknot(2), s) == "( )( )");
}

TEST_CASE("circle counts agree with the union-find count") {
  for (const char* name : {"hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    int n = d.crossing_count();
    for (std::uint64_t i = 0; i < (1u << n); ++i) {
      KauffmanState s = resolve(d, smoothing_from_index(i, n));
      int total = 0;
      for (const auto& c : s.circles) {
        total += static_cast<int>(c.edges.size());
        CHECK(c.type == type_from_parity(c.break_points / 2 + c.seifert_points));
        CHECK(c.break_points % 2 == 0);
      }
      CHECK(total == d.edge_count());
      CHECK(forest_circle_count(nesting_forest(d, s)) == s.count(CircleType::h));
    }
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_states(load("figure_eight"), 3), Error);
  CHECK(enumerate_states(load("figure_eight"), 4).size() == 16);
}

}
