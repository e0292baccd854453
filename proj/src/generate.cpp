#include "starlike/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "starlike/moves.hpp"

namespace starlike {

namespace {

std::vector<MoveSite> unsmooth_sites(const LinkDiagram& d) {
  std::vector<MoveSite> out;
  FaceMap fm = face_map(d);
  for (int a = 0; a < d.edge_count(); ++a)
    for (int b = 0; b < d.edge_count(); ++b)
      if (a != b && fm.dart_face[dart_index({a, Side::Left})] == fm.dart_face[dart_index({b, Side::Right})])
        out.push_back(MoveSite{MoveKind::Unsmooth, {a, b}, {}, {}, false, 0});
  return out;
}

}  // namespace

LinkDiagram random_diagram(int crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&] { return (rng() & 1) == 0; };
  LinkDiagram d = LinkDiagram::unknot();
  while (d.crossing_count() < crossings) {
    KinkSpec k{coin() ? 1 : -1, coin() ? Side::Left : Side::Right};
    if (d.crossing_count() == 0) {
      d = apply_move(d, MoveSite{MoveKind::Kink, {}, {}, {k}, false, 0});
      continue;
    }
    auto sites = rng() % 3 == 0 ? std::vector<MoveSite>{} : unsmooth_sites(d);
    if (sites.empty()) {
      int e = static_cast<int>(rng() % d.edge_count());
      d = apply_move(d, MoveSite{MoveKind::Kink, {e}, {}, {k}, false, 0});
      continue;
    }
    MoveSite m = sites[rng() % sites.size()];
    m.a_over = coin();
    m.outer_part = coin() ? 1 : 0;
    d = apply_move(d, m);
  }
  for (int c = 0; c < d.crossing_count(); ++c)
    if (coin()) d = flip_crossing(d, c);
  if (d.crossing_count() > 0) d = d.with_outer_face(dart_from_index(static_cast<int>(rng() % (2 * d.edge_count()))));
  return canonicalize(d);
}

std::vector<int> random_label_order(int crossings, std::uint64_t seed) {
  std::vector<int> order(crossings);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace starlike
