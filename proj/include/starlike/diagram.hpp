#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starlike {

enum class Side : std::uint8_t { Left, Right };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct Port {
  int crossing = -1;
  int slot = -1;
  friend auto operator<=>(const Port&, const Port&) = default;
};

// Four edge ids listed counterclockwise; slot 0 carries the incoming under-strand, so the
// under-strand runs 0 -> 2. A positive crossing has its over-strand running 3 -> 1.
struct Crossing {
  int sign = 1;
  std::array<int, 4> slots{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Edge {
  Port tail;
  Port head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One side of a directed edge. Faces are walks of darts with the face on the walker's left.
struct Dart {
  int edge = 0;
  Side side = Side::Left;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

constexpr int dart_index(Dart d) { return 2 * d.edge + (d.side == Side::Right ? 1 : 0); }
constexpr Dart dart_from_index(int i) { return {i / 2, (i & 1) ? Side::Right : Side::Left}; }

constexpr bool slot_is_incoming(int sign, int slot) {
  switch (slot & 3) {
    case 0: return true;
    case 1: return sign < 0;
    case 2: return false;
    default: return sign > 0;
  }
}

struct Face {
  std::vector<Dart> darts;
  int free_loop = -1;  // >= 0: the disk bounded by that crossing-free loop
  bool outer = false;
};

// Oriented link diagram stored as a signed combinatorial map. Crossing-free components
// (free loops) are unnested and sit in the outer face. Immutable once constructed.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Validates every invariant; throws starlike::Error.
  explicit LinkDiagram(std::vector<Crossing> crossings, int free_loops = 0,
                       std::optional<Dart> outer = std::nullopt,
                       std::vector<int> label_order = {});

  static LinkDiagram unknot(int loops = 1) { return LinkDiagram({}, loops); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int free_loops() const { return free_loops_; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_[c]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  int edge_at(Port p) const { return crossings_[p.crossing].slots[p.slot]; }
  bool is_incoming(Port p) const { return slot_is_incoming(crossings_[p.crossing].sign, p.slot); }

  Dart outer_face() const { return outer_; }

  // label_order()[c] is the 0-based position of crossing c in the ordering used by signs.
  const std::vector<int>& label_order() const { return label_order_; }
  int label(int c) const { return label_order_[c] + 1; }

  LinkDiagram with_label_order(std::vector<int> order) const;
  LinkDiagram with_outer_face(Dart outer) const;

  // Port at which walking the dart arrives at a crossing.
  Port dart_end(Dart d) const { return d.side == Side::Left ? edges_[d.edge].head : edges_[d.edge].tail; }
  Dart next_dart(Dart d) const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  int free_loops_ = 0;
  Dart outer_{};
  std::vector<int> label_order_;
};

int writhe(const LinkDiagram& d);

// Exchanges over and under at every crossing; the planar map is unchanged.
LinkDiagram mirror(const LinkDiagram& d);

// Exchanges over and under at a single crossing.
LinkDiagram flip_crossing(const LinkDiagram& d, int c);

std::vector<Face> faces(const LinkDiagram& d);

struct FaceMap {
  std::vector<int> dart_face;                  // by dart_index
  std::vector<std::array<int, 4>> corner_face;  // corner r sits between slots r and r+1
  int map_faces = 0;
  int outer = 0;
};

FaceMap face_map(const LinkDiagram& d);

// Edge cycles of the link components that carry crossings.
std::vector<std::vector<int>> link_components(const LinkDiagram& d);

// Relabeling-invariant text form (also encodes the outer face and loop count).
std::string canonical_form(const LinkDiagram& d);

// Renumbers crossings and edges into canonical order with the default label order.
LinkDiagram canonicalize(const LinkDiagram& d);

// 16 hex digits, FNV-1a over canonical_form.
std::string diagram_hash(const LinkDiagram& d);

// Accepts the JSON schema or the PD-like text form `X[a,b,c,d] ...`.
LinkDiagram parse_diagram(std::string_view text);

}  // namespace starlike
