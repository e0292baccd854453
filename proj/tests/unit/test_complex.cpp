#include "doctest.h"

#include "chain_checks.hpp"
#include "common.hpp"
#include "starlike/complex.hpp"
#include "starlike/generate.hpp"
#include "starlike/homology.hpp"

using namespace starlike;


TEST_SUITE("complex") {

TEST_CASE("generator gradings") {
  EnhancedComplex c(load("positive_kink"));
  CHECK(c.size() == 4 + 2);
  for (const Generator& g : c.generators()) {
    const KauffmanState& s = c.state(g.state);
    CHECK(g.i == (s.sigma - 1) / 2);
    CHECK(g.q() == g.j + g.k);
  }
}

TEST_CASE("differentials square to zero") {
  for (const char* name : {"positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    EnhancedComplex c(load(name));
    for (Differential w : {Differential::d, Differential::dprime}) {
      CHECK(oracle::square_defect(c, w).empty());
      CHECK(oracle::square_defect(c, w, Grading::Khovanov).empty());
      CHECK(oracle::anticommutation_defect(c, w).empty());
    }
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EnhancedComplex c(random_diagram(1 + static_cast<int>(seed % 5), seed));
    CHECK(oracle::square_defect(c, Differential::d).empty());
    CHECK(oracle::square_defect(c, Differential::dprime).empty());
  }
}

TEST_CASE("d preserves j and k and lowers i") {
  EnhancedComplex c(load("figure_eight"));
  for (std::size_t x = 0; x < c.size(); ++x) {
    const Generator& g = c.generator(x);
    for (const Term& t : c.apply(Differential::d, x)) {
      const Generator& h = c.generator(t.target);
      CHECK(h.i == g.i - 1);
      CHECK(h.j == g.j);
      CHECK(h.k == g.k);
      CHECK((t.coeff == 1 || t.coeff == -1));
    }
    for (const Term& t : c.apply(Differential::dprime, x)) CHECK(c.generator(t.target).i == g.i + 1);
  }
}

TEST_CASE("psi intertwines the two differentials") {
  for (const char* name : {"hopf", "trefoil", "fig2"}) CHECK(check_psi(EnhancedComplex(load(name))).passed);
}

TEST_CASE("chain Euler characteristic equals the bracket") {
  for (const char* name : {"unknot", "positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    CHECK(chain_euler_characteristic(EnhancedComplex(d)) == bracket_euler_characteristic(d));
  }
}

TEST_CASE("slices") {
  EnhancedComplex c(load("trefoil"));
  std::size_t total = 0;
  for (const ChainSlice& s : build_slices(c, Differential::d))
    for (const auto& [deg, basis] : s.basis) total += basis.size();
  CHECK(total == c.size());
}

}
