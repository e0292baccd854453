#include "doctest.h"

#include "common.hpp"
#include "oracles.hpp"
#include "starlike/generate.hpp"
#include "starlike/khovanov.hpp"

using namespace starlike;

namespace {

// Our gradings are the negatives of the usual (i, q); the complexes agree otherwise.
std::map<std::pair<int, int>, oracle::Group> as_usual(const BigradedTable& t) {
  std::map<std::pair<int, int>, oracle::Group> out;
  for (const auto& [deg, g] : t) {
    oracle::Group x{g.rank, {}};
    for (const BigInt& b : g.torsion) x.torsion.push_back(static_cast<long long>(b));
    out[{-deg.i, -deg.q}] = x;
  }
  return out;
}

}  // namespace

TEST_SUITE("khovanov") {

TEST_CASE("worked example diagram") {
  const BigradedTable expected{{{0, 1}, {1, {}}}, {{0, -1}, {1, {}}}};
  CHECK(kh_table(load("fig2")) == expected);
  CHECK(kh_table(load("fig2"), Differential::dprime) == expected);
}

TEST_CASE("trefoil") {
  BigradedTable kh = kh_table(load("trefoil"));
  CHECK(kh.size() == 5);
  CHECK(kh.at({-3, -7}).torsion == std::vector<BigInt>{2});
  CHECK(kh.at({-3, -9}).rank == 1);
  CHECK(kh.at({-2, -5}).rank == 1);
}

TEST_CASE("agrees with the classical cube complex") {
  for (const char* name : {"unknot", "positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    CHECK_MESSAGE(as_usual(kh_table(d)) == oracle::khovanov(d), name);
  }
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    LinkDiagram d = random_diagram(1 + static_cast<int>(seed % 4), seed);
    CHECK(as_usual(kh_table(d)) == oracle::khovanov(d));
  }
}

TEST_CASE("refinement and spectral sequence bounds") {
  for (const char* name : {"hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    EnhancedComplex c(d);
    CHECK(check_refinement(c, Differential::d).empty());
    CHECK(check_refinement(c, Differential::dprime).empty());
    BigradedTable kh = kh_table(c);
    HomologyTable star = homology_table(c, Differential::d);
    CHECK(check_rank_inequality(kh, star).empty());
    CHECK(check_q_euler(kh, star).empty());
  }
}

TEST_CASE("rank inequality reports the offending degree") {
  BigradedTable kh{{{0, 1}, {2, {}}}};
  HomologyTable star{{{0, 1, 0}, {1, {}}}};
  CHECK(check_rank_inequality(kh, star).find("(i,q)=(0,1)") == 0);
}

TEST_CASE("negate_i") {
  BigradedTable t{{{2, 3}, {1, {}}}};
  CHECK(negate_i(t).count({-2, 3}));
}

}
