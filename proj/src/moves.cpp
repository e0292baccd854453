#include "starlike/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace starlike {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Pair: return "R1Pair";
    case MoveKind::R1PairRemove: return "R1PairRemove";
    case MoveKind::R2Insert: return "R2Insert";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3g: return "R3g";
    case MoveKind::R3h: return "R3h";
    case MoveKind::Kink: return "Kink";
    case MoveKind::R2Opposite: return "R2Opposite";
    case MoveKind::Unsmooth: return "Unsmooth";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Pair, MoveKind::R1PairRemove, MoveKind::R2Insert, MoveKind::R2Remove, MoveKind::R3g,
                     MoveKind::R3h, MoveKind::Kink, MoveKind::R2Opposite, MoveKind::Unsmooth})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool is_star_like(MoveKind k) {
  return k != MoveKind::Kink && k != MoveKind::R2Opposite && k != MoveKind::Unsmooth;
}

namespace {

[[noreturn]] void not_applicable(const std::string& why) { throw Error(ErrorCode::NotApplicable, why); }

// Mutable copy of a diagram's crossing table.
struct Surgery {
  std::vector<Crossing> xs;
  int num_edges = 0;
  int free_loops = 0;
  Dart outer;

  explicit Surgery(const LinkDiagram& d)
      : xs(d.crossings()), num_edges(d.edge_count()), free_loops(d.free_loops()), outer(d.outer_face()) {}

  int new_edge() { return num_edges++; }
  int add_crossing(int sign, std::array<int, 4> slots) {
    xs.push_back(Crossing{sign, slots});
    return static_cast<int>(xs.size()) - 1;
  }
  Port head_of(int e) const {
    for (int c = 0; c < static_cast<int>(xs.size()); ++c)
      for (int s = 0; s < 4; ++s)
        if (xs[c].slots[s] == e && slot_is_incoming(xs[c].sign, s)) return {c, s};
    return {};
  }
  void set(Port p, int e) { xs[p.crossing].slots[p.slot] = e; }

  LinkDiagram build() const { return canonicalize(LinkDiagram(xs, free_loops, outer)); }
};

// Inserts a kink on e; e keeps its id as the part before the kink. Returns the edge after it.
int insert_kink(Surgery& s, int e, KinkSpec k) {
  Port h = s.head_of(e);
  const int loop = s.new_edge();
  const int out = s.new_edge();
  if (k.side == Side::Left) {
    if (k.sign > 0) s.add_crossing(1, {e, out, loop, loop});
    else s.add_crossing(-1, {loop, e, out, loop});
  } else {
    if (k.sign < 0) s.add_crossing(-1, {e, loop, loop, out});
    else s.add_crossing(1, {loop, loop, out, e});
  }
  s.set(h, out);
  return out;
}

// First kink on a crossing-free loop, read counterclockwise; the kink closes onto edge 0.
void kink_free_loop(Surgery& s, KinkSpec k) {
  const int e = s.new_edge();
  const int loop = s.new_edge();
  if (k.side == Side::Left) {
    if (k.sign > 0) s.add_crossing(1, {e, e, loop, loop});
    else s.add_crossing(-1, {loop, e, e, loop});
  } else {
    if (k.sign < 0) s.add_crossing(-1, {e, loop, loop, e});
    else s.add_crossing(1, {loop, loop, e, e});
  }
  s.free_loops -= 1;
  s.outer = Dart{e, Side::Right};
}

void check_kink_spec(const KinkSpec& k) {
  if (k.sign != 1 && k.sign != -1) not_applicable("kink sign must be +1 or -1");
}

LinkDiagram do_kinks(const LinkDiagram& d, const MoveSite& m, int count) {
  if (static_cast<int>(m.kinks.size()) != count)
    not_applicable(to_string(m.kind) + " needs " + std::to_string(count) + " kink specs");
  for (const auto& k : m.kinks) check_kink_spec(k);
  Surgery s(d);
  if (d.crossing_count() == 0) {
    if (d.free_loops() != 1) not_applicable("kinks on crossing-free diagrams need exactly one loop");
    if (!m.edges.empty()) not_applicable("a crossing-free diagram has no edges");
    kink_free_loop(s, m.kinks[0]);
    if (count == 2) insert_kink(s, 0, m.kinks[1]);
    return s.build();
  }
  if (m.edges.size() != 1 || m.edges[0] < 0 || m.edges[0] >= d.edge_count())
    not_applicable("kink site needs one valid edge id");
  int e = m.edges[0];
  for (int i = 0; i < count; ++i) e = insert_kink(s, i == 0 ? m.edges[0] : e, m.kinks[i]);
  return s.build();
}

struct FaceInfo {
  FaceMap fm;
  std::vector<std::vector<Dart>> darts;
};

FaceInfo face_info(const LinkDiagram& d) {
  FaceInfo info;
  info.fm = face_map(d);
  info.darts.resize(info.fm.map_faces);
  std::vector<bool> seen(info.fm.dart_face.size(), false);
  for (int i = 0; i < static_cast<int>(seen.size()); ++i) {
    if (seen[i]) continue;
    Dart cur = dart_from_index(i);
    auto& list = info.darts[info.fm.dart_face[i]];
    while (!seen[dart_index(cur)]) {
      seen[dart_index(cur)] = true;
      list.push_back(cur);
      cur = d.next_dart(cur);
    }
  }
  return info;
}

int face_of(const FaceMap& fm, Dart dt) { return fm.dart_face[dart_index(dt)]; }

bool valid_edge(const LinkDiagram& d, int e) { return e >= 0 && e < d.edge_count(); }

// R2Insert, R2Opposite and Unsmooth share the face test.
std::string face_pair_reason(const LinkDiagram& d, const MoveSite& m, Side b_side) {
  if (d.crossing_count() == 0) return "needs a diagram with crossings";
  if (m.edges.size() != 2 || !valid_edge(d, m.edges[0]) || !valid_edge(d, m.edges[1])) return "needs two valid edge ids";
  if (m.edges[0] == m.edges[1]) return "the two edges must differ";
  if (m.outer_part != 0 && m.outer_part != 1) return "outer_part must be 0 or 1";
  FaceMap fm = face_map(d);
  int fa = face_of(fm, {m.edges[0], Side::Left});
  int fb = face_of(fm, {m.edges[1], b_side});
  if (fa != fb) {
    return b_side == Side::Right ? "edges are not co-oriented along a common face"
                                 : "edges are not oppositely oriented along a common face";
  }
  return "";
}

LinkDiagram do_r2(const LinkDiagram& d, const MoveSite& m, bool opposite) {
  std::string why = face_pair_reason(d, m, opposite ? Side::Left : Side::Right);
  if (!why.empty()) not_applicable(why);
  const int a = m.edges[0], b = m.edges[1];
  const bool face_is_outer = face_of(face_map(d), {a, Side::Left}) == face_map(d).outer;
  Surgery s(d);
  Port ha = s.head_of(a), hb = s.head_of(b);
  const int a_mid = s.new_edge(), a_out = s.new_edge(), b_mid = s.new_edge(), b_out = s.new_edge();
  const bool a_under = !m.a_over;
  if (!opposite) {
    if (a_under) {
      s.add_crossing(1, {a, b_mid, a_mid, b});
      s.add_crossing(-1, {a_mid, b_mid, a_out, b_out});
    } else {
      s.add_crossing(-1, {b, a, b_mid, a_mid});
      s.add_crossing(1, {b_mid, a_out, b_out, a_mid});
    }
  } else {
    // b meets the second crossing first
    if (a_under) {
      s.add_crossing(-1, {a, b_mid, a_mid, b_out});
      s.add_crossing(1, {a_mid, b_mid, a_out, b});
    } else {
      s.add_crossing(1, {b_mid, a_mid, b_out, a});
      s.add_crossing(-1, {b, a_mid, b_mid, a_out});
    }
  }
  s.set(ha, a_out);
  s.set(hb, b_out);
  if (face_is_outer) s.outer = m.outer_part == 0 ? Dart{a, Side::Left} : Dart{a_out, Side::Left};
  return s.build();
}

LinkDiagram do_unsmooth(const LinkDiagram& d, const MoveSite& m) {
  std::string why = face_pair_reason(d, m, Side::Right);
  if (!why.empty()) not_applicable(why);
  const int a = m.edges[0], b = m.edges[1];
  FaceMap fm = face_map(d);
  const bool face_is_outer = face_of(fm, {a, Side::Left}) == fm.outer;
  Surgery s(d);
  Port ha = s.head_of(a), hb = s.head_of(b);
  const int a_out = s.new_edge(), b_out = s.new_edge();
  // a continues into b's old head and b into a's.
  if (!m.a_over) s.add_crossing(1, {a, a_out, b_out, b});
  else s.add_crossing(-1, {b, a, a_out, b_out});
  s.set(ha, a_out);
  s.set(hb, b_out);
  if (face_is_outer) s.outer = m.outer_part == 0 ? Dart{a, Side::Left} : Dart{a_out, Side::Left};
  return s.build();
}

bool under_at_tail(const LinkDiagram& d, int e) { return d.edge(e).tail.slot == 2; }
bool under_at_head(const LinkDiagram& d, int e) { return d.edge(e).head.slot == 0; }

std::string r2_remove_reason(const LinkDiagram& d, const MoveSite& m) {
  if (m.crossings.size() != 2) return "R2Remove needs two crossing ids";
  int x1 = m.crossings[0], x2 = m.crossings[1];
  if (x1 < 0 || x2 < 0 || x1 >= d.crossing_count() || x2 >= d.crossing_count()) return "crossing id out of range";
  if (x1 == x2) return "crossings must differ";
  FaceMap fm = face_map(d);
  for (int pass = 0; pass < 2; ++pass, std::swap(x1, x2)) {
    std::vector<int> between;
    for (int e = 0; e < d.edge_count(); ++e)
      if (d.edge(e).tail.crossing == x1 && d.edge(e).head.crossing == x2) between.push_back(e);
    for (int e1 : between)
      for (int e2 : between) {
        if (e1 == e2) continue;
        int f = face_of(fm, {e1, Side::Right});
        if (f != face_of(fm, {e2, Side::Left})) continue;
        int size = 0;
        for (int f2 : fm.dart_face) size += f2 == f ? 1 : 0;
        if (size != 2) continue;
        if (f == fm.outer) return "the bigon is the outer face";
        if (under_at_tail(d, e1) != under_at_head(d, e1)) return "one strand must pass over at both crossings";
        return "";
      }
  }
  return "no co-oriented bigon between the crossings";
}

// Loop edge at crossing c bounding a monogon face other than the outer one; -1 if none.
int kink_loop(const LinkDiagram& d, const FaceMap& fm, const std::vector<int>& face_size, int c) {
  for (int s = 0; s < 4; ++s) {
    int e = d.crossing(c).slots[s];
    if (d.edge(e).tail.crossing != c || d.edge(e).head.crossing != c) continue;
    for (Side side : {Side::Left, Side::Right}) {
      int f = face_of(fm, {e, side});
      if (face_size[f] == 1 && f != fm.outer) return e;
    }
  }
  return -1;
}

std::string r1_remove_reason(const LinkDiagram& d, const MoveSite& m) {
  if (m.crossings.size() != 2) return "R1PairRemove needs two crossing ids";
  int x1 = m.crossings[0], x2 = m.crossings[1];
  if (x1 < 0 || x2 < 0 || x1 >= d.crossing_count() || x2 >= d.crossing_count()) return "crossing id out of range";
  if (x1 == x2) return "crossings must differ";
  FaceMap fm = face_map(d);
  std::vector<int> size(fm.map_faces, 0);
  for (int f : fm.dart_face) ++size[f];
  if (kink_loop(d, fm, size, x1) < 0 || kink_loop(d, fm, size, x2) < 0)
    return "both crossings must be kinks with an inner monogon";
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    if ((ed.tail.crossing == x1 && ed.head.crossing == x2) || (ed.tail.crossing == x2 && ed.head.crossing == x1))
      return "";
  }
  return "the kinks are not adjacent on one arc";
}

struct Triangle {
  std::vector<Dart> darts;
  int face = -1;
};

std::optional<MoveKind> r3_kind(const LinkDiagram& d, const std::vector<int>& cs, Triangle* out, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return std::optional<MoveKind>();
  };
  if (cs.size() != 3) return fail("R3 needs three crossing ids");
  for (int c : cs)
    if (c < 0 || c >= d.crossing_count()) return fail("crossing id out of range");
  std::set<int> want(cs.begin(), cs.end());
  if (want.size() != 3) return fail("crossings must be distinct");
  FaceInfo info = face_info(d);
  for (int f = 0; f < info.fm.map_faces; ++f) {
    const auto& ds = info.darts[f];
    if (ds.size() != 3) continue;
    std::set<int> got;
    for (Dart dt : ds) got.insert(d.dart_end(dt).crossing);
    if (got != want) continue;
    if (f == info.fm.outer) return fail("the triangle is the outer face");
    if (!(ds[0].side == ds[1].side && ds[1].side == ds[2].side))
      return fail("triangle edges are not cyclically oriented (braid-like R3)");
    int over_over = 0, under_under = 0, mixed = 0;
    for (Dart dt : ds) {
      bool ut = under_at_tail(d, dt.edge), uh = under_at_head(d, dt.edge);
      if (ut && uh) ++under_under;
      else if (!ut && !uh) ++over_over;
      else ++mixed;
    }
    if (over_over != 1 || under_under != 1 || mixed != 1)
      return fail("no strand passes under the other two (alternating triangle)");
    int positive = 0;
    for (int c : cs) positive += d.crossing(c).sign > 0 ? 1 : 0;
    if (out) *out = Triangle{ds, f};
    if (positive == 2) return MoveKind::R3g;
    if (positive == 1) return MoveKind::R3h;
    return fail("triangle crossings do not have a 2:1 sign pattern");
  }
  return fail("the crossings do not bound a triangular face");
}

LinkDiagram do_r3(const LinkDiagram& d, const MoveSite& m) {
  Triangle tri;
  std::string why;
  auto kind = r3_kind(d, m.crossings, &tri, &why);
  if (!kind) not_applicable(why);
  if (*kind != m.kind) not_applicable("triangle matches " + to_string(*kind) + ", not " + to_string(m.kind));

  struct Rewire {
    int t, x_in, x_out;
    Port p, q;  // tail and head of t
  };
  std::vector<Rewire> plan;
  for (Dart dt : tri.darts) {
    const Edge& e = d.edge(dt.edge);
    Rewire r;
    r.t = dt.edge;
    r.p = e.tail;
    r.q = e.head;
    r.x_in = d.edge_at({e.tail.crossing, (e.tail.slot + 2) & 3});
    r.x_out = d.edge_at({e.head.crossing, (e.head.slot + 2) & 3});
    plan.push_back(r);
  }
  Surgery s(d);
  for (const Rewire& r : plan) {
    s.set(r.q, r.x_in);
    s.set({r.q.crossing, (r.q.slot + 2) & 3}, r.t);
    s.set({r.p.crossing, (r.p.slot + 2) & 3}, r.t);
    s.set(r.p, r.x_out);
  }
  std::set<int> tri_edges;
  for (const Rewire& r : plan) tri_edges.insert(r.t);
  if (tri_edges.count(d.outer_face().edge)) {
    FaceInfo info = face_info(d);
    bool found = false;
    for (Dart dt : info.darts[info.fm.outer])
      if (!tri_edges.count(dt.edge)) {
        s.outer = dt;
        found = true;
        break;
      }
    if (!found) not_applicable("the outer face is bounded by triangle edges only");
  }
  return s.build();
}

}  // namespace

LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<int>& crossings) {
  const int n = d.crossing_count();
  std::vector<bool> removed(n, false);
  for (int c : crossings) {
    if (c < 0 || c >= n) not_applicable("crossing id out of range");
    removed[c] = true;
  }
  // Follow each strand straight through removed crossings.
  std::vector<int> chain_of(d.edge_count(), -1);
  int chains = 0;
  std::vector<int> chain_first;
  auto next_edge = [&](int e) -> int {
    Port h = d.edge(e).head;
    return removed[h.crossing] ? d.edge_at({h.crossing, (h.slot + 2) & 3}) : -1;
  };
  for (int e = 0; e < d.edge_count(); ++e) {
    if (chain_of[e] >= 0 || removed[d.edge(e).tail.crossing]) continue;
    for (int x = e; x >= 0; x = next_edge(x)) chain_of[x] = chains;
    chain_first.push_back(e);
    ++chains;
  }
  int new_loops = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (chain_of[e] >= 0) continue;
    ++new_loops;
    for (int x = e; x >= 0 && chain_of[x] < 0; x = next_edge(x)) chain_of[x] = chains + new_loops;  // never referenced by a surviving crossing
  }
  std::vector<Crossing> xs;
  for (int c = 0; c < n; ++c) {
    if (removed[c]) continue;
    Crossing x = d.crossing(c);
    for (int& e : x.slots) e = chain_of[e];
    xs.push_back(x);
  }
  if (!xs.empty() && new_loops > 0) not_applicable("removal would leave a crossing-free component");
  const int loops = d.free_loops() + new_loops;
  if (xs.empty()) {
    if (loops != 1) not_applicable("removal would leave several crossing-free loops");
    return LinkDiagram({}, loops);
  }

  // Outer face: a dart of the old outer face on an edge ending at a surviving crossing keeps
  // its corner, so it names the same region afterwards.
  FaceMap fm = face_map(d);
  std::optional<Dart> outer;
  for (int i = 0; i < static_cast<int>(fm.dart_face.size()) && !outer; ++i) {
    if (fm.dart_face[i] != fm.outer) continue;
    Dart dt = dart_from_index(i);
    const Edge& e = d.edge(dt.edge);
    if (!removed[e.tail.crossing] || !removed[e.head.crossing]) outer = Dart{chain_of[dt.edge], dt.side};
  }
  if (!outer) not_applicable("the outer face does not survive the removal");
  try {
    return canonicalize(LinkDiagram(std::move(xs), loops, outer));
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::SplitDiagram) not_applicable("removal would split the diagram");
    throw;
  }
}

std::string check_applicable(const LinkDiagram& d, const MoveSite& m) {
  try {
    switch (m.kind) {
      case MoveKind::R2Remove: return r2_remove_reason(d, m);
      case MoveKind::R1PairRemove: return r1_remove_reason(d, m);
      case MoveKind::R3g:
      case MoveKind::R3h: {
        std::string why;
        auto k = r3_kind(d, m.crossings, nullptr, &why);
        if (!k) return why;
        return *k == m.kind ? "" : "triangle matches " + to_string(*k) + ", not " + to_string(m.kind);
      }
      default:
        apply_move(d, m);
        return "";
    }
  } catch (const Error& ex) {
    return ex.what();
  }
}

LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& m) {
  switch (m.kind) {
    case MoveKind::R1Pair: return do_kinks(d, m, 2);
    case MoveKind::Kink: return do_kinks(d, m, 1);
    case MoveKind::R2Insert: return do_r2(d, m, false);
    case MoveKind::R2Opposite: return do_r2(d, m, true);
    case MoveKind::Unsmooth: return do_unsmooth(d, m);
    case MoveKind::R2Remove: {
      std::string why = r2_remove_reason(d, m);
      if (!why.empty()) not_applicable(why);
      return remove_crossings(d, m.crossings);
    }
    case MoveKind::R1PairRemove: {
      std::string why = r1_remove_reason(d, m);
      if (!why.empty()) not_applicable(why);
      return remove_crossings(d, m.crossings);
    }
    case MoveKind::R3g:
    case MoveKind::R3h: return do_r3(d, m);
  }
  not_applicable("unknown move kind");
}

std::vector<MoveSite> star_like_sites(const LinkDiagram& d, bool allow_growth) {
  std::vector<MoveSite> out;
  const int n = d.crossing_count();
  std::vector<KinkSpec> specs;
  for (int sign : {1, -1})
    for (Side side : {Side::Left, Side::Right}) specs.push_back({sign, side});

  if (allow_growth) {
    auto add_pairs = [&](std::vector<int> edges) {
      for (const auto& k1 : specs)
        for (const auto& k2 : specs) out.push_back(MoveSite{MoveKind::R1Pair, edges, {}, {k1, k2}, false, 0});
    };
    if (n == 0) {
      if (d.free_loops() == 1) add_pairs({});
    } else {
      for (int e = 0; e < d.edge_count(); ++e) add_pairs({e});
    }
  }
  if (n == 0) return out;

  FaceInfo info = face_info(d);
  std::vector<int> size(info.fm.map_faces);
  for (int f = 0; f < info.fm.map_faces; ++f) size[f] = static_cast<int>(info.darts[f].size());

  if (allow_growth) {
    for (int f = 0; f < info.fm.map_faces; ++f) {
      const bool outer = f == info.fm.outer;
      for (Dart da : info.darts[f]) {
        if (da.side != Side::Left) continue;
        for (Dart db : info.darts[f]) {
          if (db.side != Side::Right || db.edge == da.edge) continue;
          for (bool over : {false, true})
            for (int part = 0; part < (outer ? 2 : 1); ++part)
              out.push_back(MoveSite{MoveKind::R2Insert, {da.edge, db.edge}, {}, {}, over, part});
        }
      }
    }
  }
  for (int f = 0; f < info.fm.map_faces; ++f) {
    if (f == info.fm.outer) continue;
    const auto& ds = info.darts[f];
    if (ds.size() == 2) {
      const Edge& e = d.edge(ds[0].edge);
      MoveSite m{MoveKind::R2Remove, {}, {e.tail.crossing, e.head.crossing}, {}, false, 0};
      if (e.tail.crossing < e.head.crossing && r2_remove_reason(d, m).empty()) out.push_back(m);
      std::swap(m.crossings[0], m.crossings[1]);
      if (e.tail.crossing > e.head.crossing && r2_remove_reason(d, m).empty()) out.push_back(m);
    } else if (ds.size() == 3) {
      std::vector<int> cs;
      for (Dart dt : ds) cs.push_back(d.dart_end(dt).crossing);
      std::sort(cs.begin(), cs.end());
      auto k = r3_kind(d, cs, nullptr, nullptr);
      if (k) out.push_back(MoveSite{*k, {}, cs, {}, false, 0});
    }
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    int a = std::min(d.edge(e).tail.crossing, d.edge(e).head.crossing);
    int b = std::max(d.edge(e).tail.crossing, d.edge(e).head.crossing);
    if (a == b) continue;
    MoveSite m{MoveKind::R1PairRemove, {}, {a, b}, {}, false, 0};
    if (std::find(out.begin(), out.end(), m) == out.end() && r1_remove_reason(d, m).empty()) {
      try {
        remove_crossings(d, m.crossings);
        out.push_back(m);
      } catch (const Error&) {
      }
    }
  }
  // Removal moves that would leave an unrepresentable diagram are dropped.
  std::erase_if(out, [&](const MoveSite& m) {
    if (m.kind != MoveKind::R2Remove) return false;
    try {
      remove_crossings(d, m.crossings);
      return false;
    } catch (const Error&) {
      return true;
    }
  });
  return out;
}

std::vector<TrajectoryStep> random_sequence(const LinkDiagram& d, int steps, std::uint64_t seed, int cap) {
  std::mt19937_64 rng(seed);
  std::vector<TrajectoryStep> out;
  LinkDiagram cur = d;
  for (int step = 0; step < steps; ++step) {
    auto sites = star_like_sites(cur, cur.crossing_count() + 2 <= cap);
    if (sites.empty())
      throw Error(ErrorCode::CapExceeded, "no star-like move fits under the crossing cap " + std::to_string(cap));
    const MoveSite& m = sites[rng() % sites.size()];
    cur = apply_move(cur, m);
    out.push_back({m, cur});
  }
  return out;
}

}  // namespace starlike
