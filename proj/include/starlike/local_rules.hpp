#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "starlike/complex.hpp"

namespace starlike {

struct LocalCircle {
  CircleType type = CircleType::h;
  bool minus = false;
  friend auto operator<=>(const LocalCircle&, const LocalCircle&) = default;
};

// One row of the table of partial differentials d_v: the circles meeting v before the switch,
// the types of the circles meeting v after it, and every resulting labeling (a multiset, so a
// two-term split lists its unordered labeling twice). Circle lists are sorted.
struct LocalRule {
  std::string name;
  std::vector<LocalCircle> source;
  std::vector<CircleType> target_types;
  std::vector<std::vector<LocalCircle>> targets;
};

// Hand-written table; the complex computes incidences by enumeration and never reads it.
const std::vector<LocalRule>& local_rules();

struct LocalRuleReport {
  std::string failure;                // empty when every transition matched
  std::map<std::string, long> hits;   // rule name -> transitions seen
  long transitions = 0;
};

// Compares d_v(S) for every enhanced state S and A-smoothed crossing v against the table,
// including the sign (-1)^{t^-}.
LocalRuleReport check_local_rules(const EnhancedComplex& c);
void merge_reports(LocalRuleReport& into, const LocalRuleReport& from);

// Switching one smoothing merges two circles into, or splits one into, circles whose types
// satisfy t = t1 + t2 + 1 (mod 2). Returns the first violation, empty on success.
std::string check_merge_law(const LinkDiagram& d, int cap = kDefaultCap);

}  // namespace starlike
