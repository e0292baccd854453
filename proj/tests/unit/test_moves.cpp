#include "doctest.h"

#include <set>

#include "common.hpp"
#include "starlike/bracket.hpp"
#include "starlike/homology.hpp"
#include "starlike/moves.hpp"

using namespace starlike;

namespace {

bool restores(const LinkDiagram& grown, const LinkDiagram& original) {
  for (const MoveSite& m : star_like_sites(grown, false))
    if (canonical_form(apply_move(grown, m)) == canonical_form(original)) return true;
  return false;
}

std::vector<MoveSite> r2_opposite_sites(const LinkDiagram& d) {
  std::vector<MoveSite> out;
  for (const Face& f : faces(d))
    for (Dart a : f.darts)
      for (Dart b : f.darts)
        if (a.side == Side::Left && b.side == Side::Left && a.edge != b.edge)
          for (bool over : {false, true}) out.push_back({MoveKind::R2Opposite, {a.edge, b.edge}, {}, {}, over, 0});
  return out;
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("names") {
  for (MoveKind k : {MoveKind::R1Pair, MoveKind::R1PairRemove, MoveKind::R2Insert, MoveKind::R2Remove, MoveKind::R3g,
                     MoveKind::R3h, MoveKind::Kink, MoveKind::R2Opposite, MoveKind::Unsmooth})
    CHECK(move_kind_from_string(to_string(k)) == k);
  CHECK(!move_kind_from_string("R4"));
  CHECK(is_star_like(MoveKind::R3h));
  CHECK(!is_star_like(MoveKind::Kink));
}

TEST_CASE("R1 pairs on the unknot keep V_st") {
  const GammaElement v0 = v_st(LinkDiagram::unknot());
  auto sites = star_like_sites(LinkDiagram::unknot());
  CHECK(sites.size() == 16);
  for (const MoveSite& m : sites) {
    LinkDiagram d = apply_move(LinkDiagram::unknot(), m);
    CHECK(d.crossing_count() == 2);
    CHECK(v_st(d) == v0);
    CHECK(restores(d, LinkDiagram::unknot()));
  }
}

TEST_CASE("growth moves have inverses") {
  for (const char* name : {"positive_kink", "hopf", "trefoil"}) {
    LinkDiagram d = load(name);
    for (const MoveSite& m : star_like_sites(d)) {
      if (m.kind != MoveKind::R1Pair && m.kind != MoveKind::R2Insert) continue;
      LinkDiagram g = apply_move(d, m);
      CHECK(g.crossing_count() == d.crossing_count() + 2);
      CHECK_MESSAGE(restores(g, d), name << " " << to_string(m.kind));
    }
  }
}

TEST_CASE("star-like moves keep the invariants") {
  LinkDiagram d = load("hopf");
  const GammaElement v0 = v_st(d);
  for (const MoveSite& m : star_like_sites(d)) CHECK(v_st(apply_move(d, m)) == v0);
}

TEST_CASE("R3 moves along random trajectories") {
  std::set<MoveKind> seen;
  for (const char* name : {"hopf", "trefoil"}) {
    LinkDiagram d = load(name);
    const GammaElement v0 = v_st(d);
    const HomologyTable h0 = homology_table(d, Differential::d);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      for (const auto& st : random_sequence(d, 8, seed, 7))
        for (const MoveSite& m : star_like_sites(st.diagram, false)) {
          if (m.kind != MoveKind::R3g && m.kind != MoveKind::R3h) continue;
          seen.insert(m.kind);
          LinkDiagram r = apply_move(st.diagram, m);
          CHECK(r.crossing_count() == st.diagram.crossing_count());
          CHECK(v_st(r) == v0);
          CHECK(homology_table(r, Differential::d) == h0);
          bool back = false;
          for (const MoveSite& m2 : star_like_sites(r, false))
            if (m2.kind == m.kind && canonical_form(apply_move(r, m2)) == canonical_form(st.diagram)) back = true;
          CHECK(back);
        }
  }
  CHECK(seen.count(MoveKind::R3g));
  CHECK(seen.count(MoveKind::R3h));
}

TEST_CASE("a single kink changes V_st") {
  LinkDiagram k = apply_move(LinkDiagram::unknot(), MoveSite{MoveKind::Kink, {}, {}, {{1, Side::Left}}, false, 0});
  CHECK(k.crossing_count() == 1);
  CHECK(!(v_st(k) == v_st(LinkDiagram::unknot())));
}

TEST_CASE("an opposite R2 can change V_st") {
  bool changed = false;
  for (const char* name : {"positive_kink", "hopf", "trefoil"}) {
    LinkDiagram d = load(name);
    const GammaElement v0 = v_st(d);
    for (const MoveSite& m : r2_opposite_sites(d)) {
      if (!check_applicable(d, m).empty()) continue;
      changed = changed || !(v_st(apply_move(d, m)) == v0);
    }
  }
  CHECK(changed);
}

TEST_CASE("inapplicable moves are rejected") {
  LinkDiagram d = load("trefoil");
  MoveSite bad{MoveKind::R2Remove, {}, {0, 1}, {}, false, 0};
  CHECK(!check_applicable(d, bad).empty());
  CHECK_THROWS_AS(apply_move(d, bad), Error);
  MoveSite out_of_range{MoveKind::R1Pair, {99}, {}, {{1, Side::Left}, {1, Side::Left}}, false, 0};
  CHECK(!check_applicable(d, out_of_range).empty());
}

TEST_CASE("random sequences are deterministic") {
  LinkDiagram d = load("figure_eight");
  auto a = random_sequence(d, 6, 42, 8);
  auto b = random_sequence(d, 6, 42, 8);
  REQUIRE(a.size() == 6);
  for (std::size_t s = 0; s < a.size(); ++s) {
    CHECK(a[s].move == b[s].move);
    CHECK(diagram_hash(a[s].diagram) == diagram_hash(b[s].diagram));
    CHECK(a[s].diagram.crossing_count() <= 8);
  }
  CHECK(random_sequence(d, 0, 1).empty());
  CHECK_THROWS_AS(random_sequence(LinkDiagram::unknot(), 1, 1, 0), Error);
}

TEST_CASE("removing crossings reconnects strands") {
  LinkDiagram d = apply_move(load("trefoil"), star_like_sites(load("trefoil"))[0]);
  auto sites = star_like_sites(d, false);
  REQUIRE(!sites.empty());
  CHECK(remove_crossings(d, sites[0].crossings).crossing_count() == d.crossing_count() - 2);
}

}
