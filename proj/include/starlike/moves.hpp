#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlike/diagram.hpp"
#include "starlike/error.hpp"

namespace starlike {

enum class MoveKind {
  R1Pair,        // two kinks inserted next to each other on one edge
  R1PairRemove,  // inverse of R1Pair
  R2Insert,      // co-oriented Reidemeister II across a face
  R2Remove,      // inverse of R2Insert at a bigon
  R3g,           // star-like Reidemeister III, two positive crossings
  R3h,           // star-like Reidemeister III, two negative crossings
  // Not star-like; only produced on request, for witness tests.
  Kink,          // a single Reidemeister I
  R2Opposite,    // Reidemeister II with opposite tangent directions
  Unsmooth,      // replaces two co-oriented arcs of a face by a crossing
};

std::string to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(const std::string& s);
bool is_star_like(MoveKind k);

struct KinkSpec {
  int sign = 1;
  Side side = Side::Left;  // side of the edge the loop lies on
  friend bool operator==(const KinkSpec&, const KinkSpec&) = default;
};

struct MoveSite {
  MoveKind kind = MoveKind::R1Pair;
  // R1Pair, Kink: {edge}, or {} on a crossing-free unknot.
  // R2Insert, R2Opposite, Unsmooth: {a, b}. The face lies left of a, and right of b for
  // co-oriented kinds or left of b for R2Opposite.
  std::vector<int> edges;
  // R1PairRemove, R2Remove: {x1, x2}. R3g, R3h: the triangle's three crossings.
  std::vector<int> crossings;
  std::vector<KinkSpec> kinks;  // R1Pair: 2 entries; Kink: 1
  bool a_over = false;          // R2 kinds: strand a passes over b; Unsmooth: a is the over-strand
  int outer_part = 0;           // face splits of the outer face: 0 keeps the part before the new crossings

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Throws Error(NotApplicable) naming the failing condition.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& m);

// Empty when the move applies; otherwise the reason it does not.
std::string check_applicable(const LinkDiagram& d, const MoveSite& m);

// All applicable star-like sites. Growth moves are left out when `allow_growth` is false.
std::vector<MoveSite> star_like_sites(const LinkDiagram& d, bool allow_growth = true);

struct TrajectoryStep {
  MoveSite move;
  LinkDiagram diagram;
};

// Seeded random walk through star-like moves; picks uniformly among applicable sites and skips
// growth moves that would exceed the crossing cap.
std::vector<TrajectoryStep> random_sequence(const LinkDiagram& d, int steps, std::uint64_t seed, int cap = kDefaultCap);

// Crossing removal with strands reconnected straight through; used by the removal moves.
LinkDiagram remove_crossings(const LinkDiagram& d, const std::vector<int>& crossings);

}  // namespace starlike
