#include "doctest.h"

#include "common.hpp"
#include "starlike/generate.hpp"
#include "starlike/homology.hpp"

using namespace starlike;

namespace {

HomologyGroup z(int rank = 1) { return HomologyGroup{rank, {}}; }

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("unknot") {
  HomologyTable h = homology_table(LinkDiagram::unknot(), Differential::d);
  CHECK(h == HomologyTable{{{0, 0, -1}, z()}, {{0, 0, 1}, z()}});
}

TEST_CASE("worked example diagram") {
  const HomologyTable expected{{{1, 3, 0}, z()}, {{0, 1, 2}, z()}, {{0, 1, 0}, z()}, {{0, 1, -2}, z()}};
  LinkDiagram d = load("fig2");
  CHECK(homology_table(d, Differential::d) == expected);
  CHECK(homology_table(d, Differential::dprime) == expected);
  BigradedTable collapsed = collapse_grading(expected);
  CHECK(collapsed == BigradedTable{{{1, 3}, z()}, {{0, 3}, z()}, {{0, 1}, z()}, {{0, -1}, z()}});
  BiLaurent chi = euler_characteristic_ah(expected);
  BiLaurent want;
  want.add_term(6, 0, 1);
  want.add_term(2, 4, -1);
  want.add_term(2, 0, -1);
  want.add_term(2, -4, -1);
  CHECK(chi == want);
  CHECK(chi == bracket_euler_characteristic(d));
}

TEST_CASE("trefoil carries 2-torsion") {
  HomologyTable h = homology_table(load("trefoil"), Differential::d);
  REQUIRE(h.count({-3, -7, 0}));
  CHECK(h.at({-3, -7, 0}).rank == 0);
  CHECK(h.at({-3, -7, 0}).torsion == std::vector<BigInt>{2});
  CHECK(to_string(h.at({-3, -7, 0})) == "Z/2");
  CHECK(to_string(h.at({-3, -9, 0})) == "Z");
}

TEST_CASE("Euler identity for both differentials") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LinkDiagram d = random_diagram(1 + static_cast<int>(seed % 6), seed);
    BiLaurent want = bracket_euler_characteristic(d);
    CHECK(euler_characteristic_ah(homology_table(d, Differential::d)) == want);
    CHECK(euler_characteristic_ah(homology_table(d, Differential::dprime)) == want);
  }
}

TEST_CASE("duality with the torsion shift that holds") {
  for (const char* name : {"hopf", "trefoil", "figure_eight", "fig2"}) {
    DualityReport r = verify_duality(load(name), {}, -1);
    CHECK_MESSAGE(r.ok(), name << ": " << (r.first_failure() ? r.first_failure()->name : ""));
  }
}

TEST_CASE("literal +1 torsion shift for d fails on the trefoil") {
  DualityReport r = verify_duality(load("trefoil"), {}, 1);
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name.find("torsion H_{i,j,k}(D)") == 0);
  for (const auto& c : r.checks)
    if (c.name.find("torsion H'") == 0) CHECK(c.passed);
}

TEST_CASE("cohomology of the mirror") {
  LinkDiagram d = load("figure_eight");
  CHECK(homology_table(d, Differential::d) == negate_gradings(cohomology_table(mirror(d))));
}

TEST_CASE("tables do not depend on crossing labels") {
  LinkDiagram d = load("figure_eight");
  HomologyTable h = homology_table(d, Differential::d);
  HomologyTable hp = homology_table(d, Differential::dprime);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    LinkDiagram x = d.with_label_order(random_label_order(4, seed));
    CHECK(homology_table(x, Differential::d) == h);
    CHECK(homology_table(x, Differential::dprime) == hp);
  }
}

TEST_CASE("parallel slices give the same table") {
  LinkDiagram d = random_diagram(6, 3);
  CHECK(homology_table(d, Differential::d, {kDefaultCap, 1}) == homology_table(d, Differential::d, {kDefaultCap, 3}));
}

}
