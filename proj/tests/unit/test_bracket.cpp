#include "doctest.h"

#include "common.hpp"
#include "oracles.hpp"
#include "starlike/bracket.hpp"
#include "starlike/generate.hpp"

using namespace starlike;

namespace {

Laurent poly(std::initializer_list<std::pair<int, Coeff>> terms) {
  Laurent p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_SUITE("bracket") {

TEST_CASE("unknot") {
  CHECK(v_st(LinkDiagram::unknot()) == GammaElement::single("( )"));
  CHECK(bracket_st(LinkDiagram::unknot()) == GammaElement::single("( )"));
}

TEST_CASE("a single kink is not star-like invariant") {
  GammaElement k = v_st(load("positive_kink"));
  CHECK(k == GammaElement::single(kEmptyForest, Laurent::circle_value()));
  CHECK(!(k == v_st(LinkDiagram::unknot())));
  // every choice of outer face gives the same value
  LinkDiagram d = load("positive_kink");
  for (int e = 0; e < d.edge_count(); ++e)
    for (Side s : {Side::Left, Side::Right}) CHECK(v_st(d.with_outer_face({e, s})) == k);
  // unnormalized: (A^5 + A) on the empty forest
  CHECK(bracket_st(d) == GammaElement::single(kEmptyForest, poly({{5, 1}, {1, 1}})));
}

TEST_CASE("frozen values") {
  CHECK(v_st(load("trefoil")) == GammaElement::single(kEmptyForest, poly({{-18, 1}, {-10, -1}, {-6, -1}, {-2, -1}})));
  GammaElement hopf;
  hopf.add("( )( )", poly({{4, 1}}));
  hopf.add(kEmptyForest, poly({{4, -1}, {12, 1}}));
  CHECK(v_st(load("hopf")) == hopf);
  GammaElement fig2;
  fig2.add("(( ))", poly({{2, -1}}));
  fig2.add(kEmptyForest, poly({{2, 1}, {6, 1}}));
  CHECK(v_st(load("fig2")) == fig2);
}

TEST_CASE("Kauffman collapse matches the classical bracket") {
  for (const char* name : {"unknot", "positive_kink", "hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    CHECK(collapse_to_kauffman(chi_poly(v_st(d))) == oracle::kauffman_bracket(d));
  }
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    LinkDiagram d = random_diagram(1 + static_cast<int>(seed % 6), seed);
    CHECK(collapse_to_kauffman(chi_poly(v_st(d))) == oracle::kauffman_bracket(d));
  }
}

TEST_CASE("chi counts h-circles") {
  BiLaurent c = chi_poly(v_st(load("fig2")));
  CHECK(c.coeff(2, 2) == -1);
  CHECK(c.coeff(6, 0) == 1);
}

TEST_CASE("bracket recursion at every crossing") {
  for (const char* name : {"hopf", "trefoil", "figure_eight", "fig2"}) {
    LinkDiagram d = load(name);
    for (int v = 0; v < d.crossing_count(); ++v) CHECK(skein_recursion_defect(PartialDiagram(d), v).is_zero());
  }
}

TEST_CASE("skein identity holds with the factor A^-2 - A^2") {
  const Laurent factor = poly({{-2, 1}, {2, -1}});
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    LinkDiagram d = random_diagram(2 + static_cast<int>(seed % 4), seed);
    for (int v = 0; v < d.crossing_count(); ++v) {
      SkeinTriple t = skein_triple(d, v);
      CHECK(skein_identity_defect(t, factor).is_zero());
      CHECK(!skein_identity_defect(t, -factor).is_zero());
    }
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(v_st(load("trefoil"), 2), Error);
}

}
