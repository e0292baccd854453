#include "starlike/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include <json.hpp>

#include "starlike/error.hpp"

namespace starlike {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops, std::optional<Dart> outer,
                         std::vector<int> label_order)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  const int n = crossing_count();
  const int num_edges = 2 * n;
  if (free_loops_ < 0) throw Error(ErrorCode::MalformedInput, "negative free loop count");

  edges_.assign(num_edges, Edge{});
  std::vector<int> heads(num_edges, 0), tails(num_edges, 0);
  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1)
      throw Error(ErrorCode::MalformedInput, "crossing " + std::to_string(c) + " has sign other than +1/-1");
    for (int s = 0; s < 4; ++s) {
      int e = x.slots[s];
      if (e < 0 || e >= num_edges)
        throw Error(ErrorCode::MalformedInput, "edge id " + std::to_string(e) + " out of range");
      if (slot_is_incoming(x.sign, s)) {
        if (++heads[e] > 1)
          throw Error(ErrorCode::InconsistentOrientation, "edge " + std::to_string(e) + " used twice as head");
        edges_[e].head = {c, s};
      } else {
        if (++tails[e] > 1)
          throw Error(ErrorCode::InconsistentOrientation, "edge " + std::to_string(e) + " used twice as tail");
        edges_[e].tail = {c, s};
      }
    }
  }
  for (int e = 0; e < num_edges; ++e)
    if (heads[e] != 1 || tails[e] != 1)
      throw Error(ErrorCode::DisconnectedEdge, "edge " + std::to_string(e) + " has a dangling end");

  if (n > 0) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : edges_) parent[find_root(parent, e.tail.crossing)] = find_root(parent, e.head.crossing);
    for (int c = 1; c < n; ++c)
      if (find_root(parent, c) != find_root(parent, 0))
        throw Error(ErrorCode::SplitDiagram, "crossing map is not connected");
  }

  if (label_order.empty()) {
    label_order_.resize(n);
    std::iota(label_order_.begin(), label_order_.end(), 0);
  } else {
    if (static_cast<int>(label_order.size()) != n)
      throw Error(ErrorCode::MalformedInput, "label_order length differs from crossing count");
    std::vector<int> sorted = label_order;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < n; ++c)
      if (sorted[c] != c) throw Error(ErrorCode::MalformedInput, "label_order is not a permutation");
    label_order_ = std::move(label_order);
  }

  outer_ = outer.value_or(Dart{0, Side::Left});
  if (n == 0) {
    outer_ = Dart{};
  } else if (outer_.edge < 0 || outer_.edge >= num_edges) {
    throw Error(ErrorCode::MalformedInput, "outer_face edge out of range");
  }

  if (n > 0) {
    int face_count = face_map(*this).map_faces;
    if (n - num_edges + face_count != 2)
      throw Error(ErrorCode::NonPlanar, "rotation system has Euler characteristic " +
                                            std::to_string(n - num_edges + face_count));
  }
}

LinkDiagram LinkDiagram::with_label_order(std::vector<int> order) const {
  return LinkDiagram(crossings_, free_loops_, outer_, std::move(order));
}

LinkDiagram LinkDiagram::with_outer_face(Dart outer) const {
  return LinkDiagram(crossings_, free_loops_, outer, label_order_);
}

Dart LinkDiagram::next_dart(Dart d) const {
  Port p = dart_end(d);
  int q = (p.slot + 3) & 3;
  int e = crossings_[p.crossing].slots[q];
  Port out{p.crossing, q};
  return edges_[e].tail == out ? Dart{e, Side::Left} : Dart{e, Side::Right};
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign;
  return w;
}

namespace {

Crossing flipped(const Crossing& x) {
  // The old over-strand becomes the under-strand; its incoming slot becomes slot 0.
  Crossing y;
  y.sign = -x.sign;
  int start = x.sign > 0 ? 3 : 1;
  for (int s = 0; s < 4; ++s) y.slots[s] = x.slots[(start + s) & 3];
  return y;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossings().size());
  for (const Crossing& x : d.crossings()) xs.push_back(flipped(x));
  return LinkDiagram(std::move(xs), d.free_loops(), d.outer_face(), d.label_order());
}

LinkDiagram flip_crossing(const LinkDiagram& d, int c) {
  std::vector<Crossing> xs = d.crossings();
  xs.at(c) = flipped(xs[c]);
  return LinkDiagram(std::move(xs), d.free_loops(), d.outer_face(), d.label_order());
}

FaceMap face_map(const LinkDiagram& d) {
  FaceMap fm;
  const int darts = 2 * d.edge_count();
  fm.dart_face.assign(darts, -1);
  fm.corner_face.assign(d.crossing_count(), {-1, -1, -1, -1});
  int face = 0;
  for (int i = 0; i < darts; ++i) {
    if (fm.dart_face[i] >= 0) continue;
    Dart cur = dart_from_index(i);
    while (fm.dart_face[dart_index(cur)] < 0) {
      fm.dart_face[dart_index(cur)] = face;
      Port p = d.dart_end(cur);
      fm.corner_face[p.crossing][(p.slot + 3) & 3] = face;
      cur = d.next_dart(cur);
    }
    ++face;
  }
  fm.map_faces = face;
  fm.outer = d.crossing_count() > 0 ? fm.dart_face[dart_index(d.outer_face())] : 0;
  return fm;
}

std::vector<Face> faces(const LinkDiagram& d) {
  std::vector<Face> out;
  if (d.crossing_count() == 0) {
    out.push_back(Face{{}, -1, true});
    for (int l = 0; l < d.free_loops(); ++l) out.push_back(Face{{}, l, false});
    return out;
  }
  FaceMap fm = face_map(d);
  out.resize(fm.map_faces);
  std::vector<bool> seen(fm.dart_face.size(), false);
  for (int i = 0; i < static_cast<int>(fm.dart_face.size()); ++i) {
    if (seen[i]) continue;
    Face& f = out[fm.dart_face[i]];
    Dart cur = dart_from_index(i);
    while (!seen[dart_index(cur)]) {
      seen[dart_index(cur)] = true;
      f.darts.push_back(cur);
      cur = d.next_dart(cur);
    }
  }
  out[fm.outer].outer = true;
  for (int l = 0; l < d.free_loops(); ++l) out.push_back(Face{{}, l, false});
  return out;
}

std::vector<std::vector<int>> link_components(const LinkDiagram& d) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(d.edge_count(), false);
  for (int e0 = 0; e0 < d.edge_count(); ++e0) {
    if (seen[e0]) continue;
    std::vector<int> comp;
    int e = e0;
    while (!seen[e]) {
      seen[e] = true;
      comp.push_back(e);
      Port h = d.edge(e).head;
      e = d.edge_at({h.crossing, (h.slot + 2) & 3});
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

struct Relabeling {
  std::string code;
  std::vector<int> edge_to_new;
  std::vector<int> crossing_order;  // new index -> old crossing
  Dart outer;
};

Relabeling relabel_from(const LinkDiagram& d, const FaceMap& fm, int start) {
  const int n = d.crossing_count();
  Relabeling r;
  r.edge_to_new.assign(d.edge_count(), -1);
  std::vector<int> cross_new(n, -1);
  int next_edge = 0;
  auto walk = [&](int e0) {
    int e = e0;
    do {
      r.edge_to_new[e] = next_edge++;
      Port h = d.edge(e).head;
      if (cross_new[h.crossing] < 0) {
        cross_new[h.crossing] = static_cast<int>(r.crossing_order.size());
        r.crossing_order.push_back(h.crossing);
      }
      e = d.edge_at({h.crossing, (h.slot + 2) & 3});
    } while (e != e0);
  };
  walk(start);
  for (std::size_t k = 0; k < r.crossing_order.size(); ++k) {
    const Crossing& x = d.crossing(r.crossing_order[k]);
    for (int s = 0; s < 4; ++s)
      if (r.edge_to_new[x.slots[s]] < 0) walk(x.slots[s]);
  }

  Dart best{d.edge_count(), Side::Right};
  for (int i = 0; i < static_cast<int>(fm.dart_face.size()); ++i) {
    if (fm.dart_face[i] != fm.outer) continue;
    Dart dt = dart_from_index(i);
    Dart mapped{r.edge_to_new[dt.edge], dt.side};
    best = std::min(best, mapped);
  }
  r.outer = best;

  std::string& code = r.code;
  code = "n" + std::to_string(n) + "f" + std::to_string(d.free_loops()) + "o" +
         std::to_string(best.edge) + (best.side == Side::Left ? "L" : "R");
  for (int old : r.crossing_order) {
    const Crossing& x = d.crossing(old);
    code += x.sign > 0 ? "|+" : "|-";
    for (int s = 0; s < 4; ++s) code += "," + std::to_string(r.edge_to_new[x.slots[s]]);
  }
  return r;
}

Relabeling best_relabeling(const LinkDiagram& d) {
  FaceMap fm = face_map(d);
  Relabeling best;
  for (int e = 0; e < d.edge_count(); ++e) {
    Relabeling r = relabel_from(d, fm, e);
    if (e == 0 || r.code < best.code) best = std::move(r);
  }
  return best;
}

}  // namespace

std::string canonical_form(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return "n0f" + std::to_string(d.free_loops());
  return best_relabeling(d).code;
}

LinkDiagram canonicalize(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return LinkDiagram({}, d.free_loops());
  Relabeling r = best_relabeling(d);
  std::vector<Crossing> xs;
  for (int old : r.crossing_order) {
    Crossing x = d.crossing(old);
    for (int& e : x.slots) e = r.edge_to_new[e];
    xs.push_back(x);
  }
  return LinkDiagram(std::move(xs), d.free_loops(), r.outer);
}

std::string diagram_hash(const LinkDiagram& d) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canonical_form(d)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------------------
// Parsing

namespace {

using nlohmann::json;

Side parse_side(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::MalformedInput, "outer_face.side must be a string");
  auto s = j.get<std::string>();
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw Error(ErrorCode::MalformedInput, "outer_face.side must be \"left\" or \"right\"");
}

struct PdCrossing {
  std::array<long long, 4> labels;
};

// Over-strand directions are propagated from the under-strands; labels that never occur
// under fall back to the consecutive-label convention.
std::vector<Crossing> desugar_pd(const std::vector<PdCrossing>& pd) {
  std::set<long long> label_set;
  for (const auto& x : pd)
    for (long long l : x.labels) label_set.insert(l);
  std::map<long long, int> id;
  for (long long l : label_set) id.emplace(l, static_cast<int>(id.size()));

  const int n = static_cast<int>(pd.size());
  std::vector<std::array<int, 4>> slots(n);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) slots[c][s] = id.at(pd[c].labels[s]);

  const int num_edges = static_cast<int>(id.size());
  // end_dir[e] : crossing/slot known to be the head (1) or tail (0) of e
  std::vector<std::vector<std::pair<Port, int>>> ends(num_edges);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[slots[c][s]].push_back({Port{c, s}, -1});

  std::vector<int> over_in(n, -1);  // slot (1 or 3) of incoming over-strand
  auto known_dir = [&](int e, Port p) -> int {
    for (auto& [q, dir] : ends[e])
      if (q == p) return dir;
    return -1;
  };
  auto set_dir = [&](int e, Port p, int dir) {
    for (auto& [q, d] : ends[e])
      if (q == p) d = dir;
  };
  for (int c = 0; c < n; ++c) {
    set_dir(slots[c][0], {c, 0}, 1);
    set_dir(slots[c][2], {c, 2}, 0);
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < num_edges; ++e) {
      if (ends[e].size() != 2) continue;
      auto& [p0, d0] = ends[e][0];
      auto& [p1, d1] = ends[e][1];
      if (d0 >= 0 && d1 < 0) { d1 = 1 - d0; progress = true; }
      if (d1 >= 0 && d0 < 0) { d0 = 1 - d1; progress = true; }
    }
    for (int c = 0; c < n; ++c) {
      if (over_in[c] >= 0) continue;
      int d1 = known_dir(slots[c][1], {c, 1});
      int d3 = known_dir(slots[c][3], {c, 3});
      if (d1 >= 0) over_in[c] = d1 == 1 ? 1 : 3;
      else if (d3 >= 0) over_in[c] = d3 == 1 ? 3 : 1;
      if (over_in[c] >= 0) {
        set_dir(slots[c][1], {c, 1}, over_in[c] == 1 ? 1 : 0);
        set_dir(slots[c][3], {c, 3}, over_in[c] == 3 ? 1 : 0);
        progress = true;
      }
    }
  }
  std::vector<Crossing> xs(n);
  for (int c = 0; c < n; ++c) {
    if (over_in[c] < 0) {
      long long j = pd[c].labels[1], l = pd[c].labels[3];
      over_in[c] = (j - l == 1 || l - j > 1) ? 3 : 1;
    }
    xs[c].sign = over_in[c] == 3 ? 1 : -1;
    xs[c].slots = slots[c];
  }
  return xs;
}

std::vector<PdCrossing> parse_pd_text(std::string_view text, int& loops) {
  static const std::regex token(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]|Loop\s*\[[^\]]*\])");
  std::string s(text);
  std::vector<PdCrossing> out;
  std::string residue;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), token); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    residue += s.substr(last, m.position() - last);
    last = m.position() + m.length();
    if (m[1].matched) {
      PdCrossing x;
      for (int k = 0; k < 4; ++k) x.labels[k] = std::stoll(m[k + 1].str());
      out.push_back(x);
    } else {
      ++loops;
    }
  }
  residue += s.substr(last);
  for (char ch : residue)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != '[' && ch != ']' &&
        ch != 'P' && ch != 'D')
      throw Error(ErrorCode::MalformedInput, std::string("unexpected character '") + ch + "' in PD text");
  if (out.empty() && loops == 0) throw Error(ErrorCode::MalformedInput, "empty PD text");
  return out;
}

std::vector<Crossing> parse_json_crossings(const json& arr, int declared_edges) {
  if (!arr.is_array()) throw Error(ErrorCode::MalformedInput, "crossings must be an array");
  std::vector<Crossing> xs;
  std::vector<int> heads, tails;
  int max_edge = -1;
  for (const auto& jc : arr) {
    if (!jc.is_object() || !jc.contains("slots") || !jc.contains("sign"))
      throw Error(ErrorCode::MalformedInput, "crossing needs sign and slots");
    const auto& js = jc["slots"];
    if (!js.is_array() || js.size() != 4 || !jc["sign"].is_number_integer())
      throw Error(ErrorCode::MalformedInput, "crossing slots must be four edge ids");
    Crossing x;
    x.sign = jc["sign"].get<int>();
    if (x.sign != 1 && x.sign != -1) throw Error(ErrorCode::MalformedInput, "sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      if (!js[s].is_number_integer()) throw Error(ErrorCode::MalformedInput, "slot must be an integer");
      x.slots[s] = js[s].get<int>();
      if (x.slots[s] < 0) throw Error(ErrorCode::MalformedInput, "negative edge id");
      max_edge = std::max(max_edge, x.slots[s]);
    }
    std::array<bool, 4> incoming{};
    if (jc.contains("slot_dirs")) {
      const auto& jd = jc["slot_dirs"];
      if (!jd.is_array() || jd.size() != 4) throw Error(ErrorCode::MalformedInput, "slot_dirs needs four entries");
      for (int s = 0; s < 4; ++s) {
        if (!jd[s].is_string()) throw Error(ErrorCode::MalformedInput, "slot_dirs entries are strings");
        auto v = jd[s].get<std::string>();
        if (v != "in" && v != "out") throw Error(ErrorCode::MalformedInput, "slot_dirs entry must be in/out");
        incoming[s] = v == "in";
      }
      if (!incoming[0] || incoming[2] || incoming[1] == incoming[3])
        throw Error(ErrorCode::MalformedInput,
                    "slot 0 must be incoming, slot 2 outgoing, and exactly one of slots 1, 3 incoming");
      int implied = incoming[3] ? 1 : -1;
      if (implied != x.sign)
        throw Error(ErrorCode::SignMismatch, "crossing " + std::to_string(xs.size()) + " declares sign " +
                                                 std::to_string(x.sign) + " but its over-strand gives " +
                                                 std::to_string(implied));
    } else {
      for (int s = 0; s < 4; ++s) incoming[s] = slot_is_incoming(x.sign, s);
    }
    for (int s = 0; s < 4; ++s) {
      int e = x.slots[s];
      auto& counts = incoming[s] ? heads : tails;
      if (static_cast<int>(counts.size()) <= e) counts.resize(e + 1, 0);
      if (++counts[e] > 1)
        throw Error(ErrorCode::InconsistentOrientation,
                    "edge " + std::to_string(e) + (incoming[s] ? " used twice as head" : " used twice as tail"));
    }
    xs.push_back(x);
  }
  int num_edges = declared_edges >= 0 ? declared_edges : max_edge + 1;
  if (max_edge >= num_edges) throw Error(ErrorCode::MalformedInput, "edge id exceeds declared edge count");
  heads.resize(num_edges, 0);
  tails.resize(num_edges, 0);
  for (int e = 0; e < num_edges; ++e)
    if (heads[e] != 1 || tails[e] != 1)
      throw Error(ErrorCode::DisconnectedEdge, "edge " + std::to_string(e) + " has a dangling end");
  return xs;
}

LinkDiagram parse_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "diagram must be a JSON object");
  int loops = 0;
  if (j.contains("free_loops")) {
    if (!j["free_loops"].is_number_integer() || j["free_loops"].get<int>() < 0)
      throw Error(ErrorCode::MalformedInput, "free_loops must be a non-negative integer");
    loops = j["free_loops"].get<int>();
  }
  std::vector<Crossing> xs;
  if (j.contains("pd")) {
    if (!j["pd"].is_string()) throw Error(ErrorCode::MalformedInput, "pd must be a string");
    int extra = 0;
    xs = desugar_pd(parse_pd_text(j["pd"].get<std::string>(), extra));
    loops += extra;
  } else {
    if (!j.contains("crossings")) throw Error(ErrorCode::MalformedInput, "missing crossings");
    int declared = -1;
    if (j.contains("edges")) {
      if (!j["edges"].is_number_integer()) throw Error(ErrorCode::MalformedInput, "edges must be an integer");
      declared = j["edges"].get<int>();
    }
    xs = parse_json_crossings(j["crossings"], declared);
  }
  std::optional<Dart> outer;
  if (j.contains("outer_face")) {
    const auto& of = j["outer_face"];
    if (!of.is_object() || !of.contains("edge") || !of["edge"].is_number_integer())
      throw Error(ErrorCode::MalformedInput, "outer_face needs an integer edge");
    Dart dt{of["edge"].get<int>(), Side::Left};
    if (of.contains("side")) dt.side = parse_side(of["side"]);
    outer = dt;
  }
  std::vector<int> order;
  if (j.contains("label_order")) {
    if (!j["label_order"].is_array()) throw Error(ErrorCode::MalformedInput, "label_order must be an array");
    for (const auto& v : j["label_order"]) {
      if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "label_order entries are integers");
      order.push_back(v.get<int>());
    }
  }
  return LinkDiagram(std::move(xs), loops, outer, std::move(order));
}

}  // namespace

LinkDiagram parse_diagram(std::string_view text) {
  auto first = std::find_if_not(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (first != text.end() && *first == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::MalformedInput, ex.what());
    }
    return parse_json(j);
  }
  int loops = 0;
  auto pd = parse_pd_text(text, loops);
  return LinkDiagram(desugar_pd(pd), loops);
}

}  // namespace starlike
