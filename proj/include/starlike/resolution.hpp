#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlike/diagram.hpp"
#include "starlike/error.hpp"

namespace starlike {

enum class Smoothing : std::uint8_t { A, Ainv };
enum class CircleType : std::uint8_t { d, h };

inline const char* to_string(CircleType t) { return t == CircleType::d ? "d" : "h"; }

// Merging two circles gives type t1 + t2 + 1 (mod 2) with d = 1, h = 0.
constexpr int parity(CircleType t) { return t == CircleType::d ? 1 : 0; }
constexpr CircleType type_from_parity(int p) { return (p & 1) ? CircleType::d : CircleType::h; }

// True when the smoothing joins incoming slots to outgoing slots (two Seifert points).
constexpr bool is_seifert(int sign, Smoothing s) { return (s == Smoothing::A) == (sign > 0); }

struct StateCircle {
  int id = 0;                // smallest edge id on the circle; free loops get edge_count + k
  int break_points = 0;
  int seifert_points = 0;
  CircleType type = CircleType::h;
  std::vector<int> edges;    // sorted; empty for free loops
};

struct KauffmanState {
  std::vector<Smoothing> smoothing;
  std::vector<StateCircle> circles;  // sorted by id
  std::vector<int> edge_circle;      // edge -> index into circles
  int sigma = 0;

  int count(CircleType t) const;
};

// Encoding of the empty configuration.
inline constexpr const char* kEmptyForest = "\xE2\x88\x85";

// Caches the face structure of one diagram so many states can be resolved cheaply.
class StateResolver {
 public:
  explicit StateResolver(const LinkDiagram& d);

  const LinkDiagram& diagram() const { return *d_; }

  KauffmanState resolve(const std::vector<Smoothing>& smoothing) const;
  std::string nesting_forest(const KauffmanState& s) const;

 private:
  const LinkDiagram* d_;
  FaceMap fm_;
};

KauffmanState resolve(const LinkDiagram& d, const std::vector<Smoothing>& smoothing);
std::string nesting_forest(const LinkDiagram& d, const KauffmanState& s);

// Lexicographic order with A < A^-1, crossing 0 most significant.
std::vector<Smoothing> smoothing_from_index(std::uint64_t index, int crossings);
std::uint64_t index_of(const std::vector<Smoothing>& smoothing);

// Calls f(const KauffmanState&) for all 2^n states in lexicographic order.
template <class F>
void enumerate_states(const LinkDiagram& d, int cap, F&& f) {
  check_cap(d.crossing_count(), cap);
  StateResolver r(d);
  const std::uint64_t total = std::uint64_t{1} << d.crossing_count();
  for (std::uint64_t i = 0; i < total; ++i) f(r.resolve(smoothing_from_index(i, d.crossing_count())));
}

std::vector<KauffmanState> enumerate_states(const LinkDiagram& d, int cap);

// Number of forest nodes (h-circles) in an encoding.
int forest_circle_count(const std::string& encoding);

}  // namespace starlike
