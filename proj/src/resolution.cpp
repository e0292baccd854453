#include "starlike/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "starlike/error.hpp"

namespace starlike {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr std::array<std::array<int, 4>, 2> kPairs = {{{0, 1, 2, 3}, {1, 2, 3, 0}}};

}  // namespace

int KauffmanState::count(CircleType t) const {
  return static_cast<int>(std::count_if(circles.begin(), circles.end(), [t](const StateCircle& c) { return c.type == t; }));
}

StateResolver::StateResolver(const LinkDiagram& d) : d_(&d) {
  if (d.crossing_count() > 0) fm_ = face_map(d);
}

KauffmanState StateResolver::resolve(const std::vector<Smoothing>& smoothing) const {
  const LinkDiagram& d = *d_;
  const int n = d.crossing_count();
  const int num_edges = d.edge_count();
  if (static_cast<int>(smoothing.size()) != n)
    throw Error(ErrorCode::LengthMismatch, "smoothing has " + std::to_string(smoothing.size()) +
                                               " entries for " + std::to_string(n) + " crossings");
  KauffmanState s;
  s.smoothing = smoothing;
  UnionFind uf(num_edges);
  for (int c = 0; c < n; ++c) {
    const auto& p = kPairs[smoothing[c] == Smoothing::A ? 0 : 1];
    const auto& slots = d.crossing(c).slots;
    uf.unite(slots[p[0]], slots[p[1]]);
    uf.unite(slots[p[2]], slots[p[3]]);
    s.sigma += smoothing[c] == Smoothing::A ? 1 : -1;
  }

  // Edges are visited in increasing order, so the first edge seen on a circle is its id.
  std::vector<int> root_circle(num_edges, -1);
  s.edge_circle.assign(num_edges, -1);
  for (int e = 0; e < num_edges; ++e) {
    int r = uf.find(e);
    if (root_circle[r] < 0) {
      root_circle[r] = static_cast<int>(s.circles.size());
      s.circles.push_back(StateCircle{e, 0, 0, CircleType::h, {}});
    }
    s.edge_circle[e] = root_circle[r];
    s.circles[root_circle[r]].edges.push_back(e);
  }
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossing(c);
    const auto& p = kPairs[smoothing[c] == Smoothing::A ? 0 : 1];
    bool seifert = is_seifert(x.sign, smoothing[c]);
    for (int arc = 0; arc < 2; ++arc) {
      StateCircle& circ = s.circles[s.edge_circle[x.slots[p[2 * arc]]]];
      (seifert ? circ.seifert_points : circ.break_points) += 1;
    }
  }
  for (int k = 0; k < d.free_loops(); ++k) s.circles.push_back(StateCircle{num_edges + k, 0, 0, CircleType::h, {}});
  for (StateCircle& circ : s.circles)
    circ.type = ((circ.break_points / 2 + circ.seifert_points) & 1) ? CircleType::d : CircleType::h;
  return s;
}

namespace {

struct ForestBuilder {
  const KauffmanState& s;
  // adjacency: region -> list of (circle, other region)
  std::vector<std::vector<std::pair<int, int>>> adj;

  std::vector<std::string> items(int region, int parent_circle) {
    std::vector<std::string> out;
    for (auto [circ, other] : adj[region]) {
      if (circ == parent_circle) continue;
      std::vector<std::string> inner = items(other, circ);
      if (s.circles[circ].type == CircleType::h) {
        std::sort(inner.begin(), inner.end());
        std::string enc = "(";
        if (inner.empty()) enc += " ";
        for (auto& t : inner) enc += t;
        enc += ")";
        out.push_back(std::move(enc));
      } else {
        for (auto& t : inner) out.push_back(std::move(t));
      }
    }
    return out;
  }
};

}  // namespace

std::string StateResolver::nesting_forest(const KauffmanState& s) const {
  const LinkDiagram& d = *d_;
  const int n = d.crossing_count();
  const int num_circles = static_cast<int>(s.circles.size());

  int num_regions = 1;
  int root = 0;
  ForestBuilder fb{s, {}};
  if (n > 0) {
    UnionFind uf(fm_.map_faces);
    for (int c = 0; c < n; ++c) {
      const auto& corners = fm_.corner_face[c];
      if (s.smoothing[c] == Smoothing::A) uf.unite(corners[1], corners[3]);
      else uf.unite(corners[0], corners[2]);
    }
    std::vector<int> region_id(fm_.map_faces, -1);
    num_regions = 0;
    for (int f = 0; f < fm_.map_faces; ++f)
      if (region_id[uf.find(f)] < 0) region_id[uf.find(f)] = num_regions++;
    root = region_id[uf.find(fm_.outer)];
    fb.adj.resize(num_regions + d.free_loops());
    for (int ci = 0; ci < num_circles; ++ci) {
      const StateCircle& circ = s.circles[ci];
      if (circ.edges.empty()) continue;
      int e = circ.edges.front();
      int left = region_id[uf.find(fm_.dart_face[dart_index({e, Side::Left})])];
      int right = region_id[uf.find(fm_.dart_face[dart_index({e, Side::Right})])];
      fb.adj[left].push_back({ci, right});
      fb.adj[right].push_back({ci, left});
    }
  } else {
    fb.adj.resize(1 + d.free_loops());
  }
  // Free loops bound empty disks in the outer region.
  int next_region = num_regions;
  for (int ci = 0; ci < num_circles; ++ci) {
    if (!s.circles[ci].edges.empty()) continue;
    fb.adj[root].push_back({ci, next_region});
    fb.adj[next_region].push_back({ci, root});
    ++next_region;
  }

  std::vector<std::string> top = fb.items(root, -1);
  if (top.empty()) return kEmptyForest;
  std::sort(top.begin(), top.end());
  std::string enc;
  for (auto& t : top) enc += t;
  return enc;
}

KauffmanState resolve(const LinkDiagram& d, const std::vector<Smoothing>& smoothing) {
  return StateResolver(d).resolve(smoothing);
}

std::string nesting_forest(const LinkDiagram& d, const KauffmanState& s) { return StateResolver(d).nesting_forest(s); }

std::vector<Smoothing> smoothing_from_index(std::uint64_t index, int crossings) {
  std::vector<Smoothing> s(crossings, Smoothing::A);
  for (int c = 0; c < crossings; ++c)
    if ((index >> (crossings - 1 - c)) & 1u) s[c] = Smoothing::Ainv;
  return s;
}

std::uint64_t index_of(const std::vector<Smoothing>& smoothing) {
  std::uint64_t idx = 0;
  for (Smoothing s : smoothing) idx = (idx << 1) | (s == Smoothing::Ainv ? 1u : 0u);
  return idx;
}

std::vector<KauffmanState> enumerate_states(const LinkDiagram& d, int cap) {
  std::vector<KauffmanState> out;
  enumerate_states(d, cap, [&](const KauffmanState& s) { out.push_back(s); });
  return out;
}

int forest_circle_count(const std::string& encoding) {
  return static_cast<int>(std::count(encoding.begin(), encoding.end(), '('));
}

}  // namespace starlike
