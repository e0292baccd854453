#include "starlike/local_rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace starlike {

namespace {

constexpr LocalCircle dp{CircleType::d, false};
constexpr LocalCircle dm{CircleType::d, true};
constexpr LocalCircle hp{CircleType::h, false};
constexpr LocalCircle hm{CircleType::h, true};
constexpr CircleType D = CircleType::d;
constexpr CircleType H = CircleType::h;

std::string describe(const std::vector<LocalCircle>& cs) {
  std::string s;
  for (const auto& c : cs) s += std::string(to_string(c.type)) + (c.minus ? "-" : "+") + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

const std::vector<LocalRule>& local_rules() {
  static const std::vector<LocalRule> rules = {
      // merges
      {"merge d+ d+", {dp, dp}, {D}, {}},
      {"merge d+ d-", {dp, dm}, {D}, {{dp}}},
      {"merge d- d-", {dm, dm}, {D}, {{dm}}},
      {"merge h+ h+", {hp, hp}, {D}, {}},
      {"merge h+ h-", {hp, hm}, {D}, {{dp}}},
      {"merge h- h-", {hm, hm}, {D}, {}},
      {"merge d+ h+", {dp, hp}, {H}, {}},
      {"merge d+ h-", {dp, hm}, {H}, {}},
      {"merge d- h+", {dm, hp}, {H}, {{hp}}},
      {"merge d- h-", {dm, hm}, {H}, {{hm}}},
      // splits
      {"split d+ into d d", {dp}, {D, D}, {{dp, dp}}},
      {"split d- into d d", {dm}, {D, D}, {{dp, dm}, {dp, dm}}},
      {"split d+ into h h", {dp}, {H, H}, {}},
      {"split d- into h h", {dm}, {H, H}, {{hp, hm}, {hp, hm}}},
      {"split h+ into d h", {hp}, {D, H}, {{dp, hp}}},
      {"split h- into d h", {hm}, {D, H}, {{dp, hm}}},
  };
  return rules;
}

namespace {

// Indices of the circles of a state that meet crossing v, sorted and deduplicated.
std::vector<int> touching(const LinkDiagram& d, const KauffmanState& s, int v) {
  std::set<int> out;
  for (int e : d.crossing(v).slots) out.insert(s.edge_circle[e]);
  return {out.begin(), out.end()};
}

std::vector<LocalCircle> local_of(const EnhancedComplex& c, std::size_t g, const std::vector<int>& circles) {
  std::vector<LocalCircle> out;
  const KauffmanState& s = c.state(c.generator(g).state);
  for (int ci : circles) out.push_back({s.circles[ci].type, c.is_minus(g, ci)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LocalRuleReport check_local_rules(const EnhancedComplex& c) {
  LocalRuleReport rep;
  const LinkDiagram& d = c.diagram();
  const int n = d.crossing_count();
  for (std::size_t g = 0; g < c.size() && rep.failure.empty(); ++g) {
    const std::uint32_t st = c.generator(g).state;
    for (int v = 0; v < n; ++v) {
      if (c.smoothing(st, v) != Smoothing::A) continue;
      const std::uint32_t to = st | (std::uint32_t{1} << (n - 1 - v));
      auto src_circles = touching(d, c.state(st), v);
      auto dst_circles = touching(d, c.state(to), v);
      std::vector<LocalCircle> source = local_of(c, g, src_circles);
      std::vector<CircleType> types;
      for (int ci : dst_circles) types.push_back(c.state(to).circles[ci].type);
      std::sort(types.begin(), types.end());

      const LocalRule* rule = nullptr;
      for (const auto& r : local_rules())
        if (r.source == source && r.target_types == types) rule = &r;
      std::ostringstream where;
      where << "generator " << g << ", crossing " << v << ", circles " << describe(source);
      if (!rule) {
        rep.failure = where.str() + ": no table row for this pattern";
        break;
      }
      ++rep.hits[rule->name];
      ++rep.transitions;

      const int sign = (c.t_minus(st, v) & 1) ? -1 : 1;
      std::vector<std::vector<LocalCircle>> got;
      for (const Term& t : c.partial_d(g, v)) {
        if (t.coeff != sign) {
          rep.failure = where.str() + ": coefficient differs from (-1)^t";
          break;
        }
        got.push_back(local_of(c, t.target, dst_circles));
      }
      if (!rep.failure.empty()) break;
      std::sort(got.begin(), got.end());
      auto want = rule->targets;
      std::sort(want.begin(), want.end());
      if (got != want) {
        rep.failure = where.str() + ": terms differ from row '" + rule->name + "'";
        break;
      }
    }
  }
  return rep;
}

void merge_reports(LocalRuleReport& into, const LocalRuleReport& from) {
  if (into.failure.empty()) into.failure = from.failure;
  for (const auto& [k, v] : from.hits) into.hits[k] += v;
  into.transitions += from.transitions;
}

std::string check_merge_law(const LinkDiagram& d, int cap) {
  const int n = d.crossing_count();
  auto states = enumerate_states(d, cap);
  for (std::uint32_t s = 0; s < states.size(); ++s)
    for (int v = 0; v < n; ++v) {
      const std::uint32_t t = s ^ (std::uint32_t{1} << (n - 1 - v));
      if (t < s) continue;
      auto a = touching(d, states[s], v);
      auto b = touching(d, states[t], v);
      if (a.size() + b.size() != 3) return "switching crossing " + std::to_string(v) + " neither merges nor splits";
      const auto& one = a.size() == 1 ? states[s].circles[a[0]] : states[t].circles[b[0]];
      const auto& two = a.size() == 2 ? a : b;
      const auto& st = a.size() == 2 ? states[s] : states[t];
      int expected = (parity(st.circles[two[0]].type) + parity(st.circles[two[1]].type) + 1) & 1;
      if (parity(one.type) != expected) {
        std::ostringstream os;
        os << "states " << s << " and " << t << " at crossing " << v << ": " << to_string(st.circles[two[0]].type)
           << " and " << to_string(st.circles[two[1]].type) << " pair with " << to_string(one.type);
        return os.str();
      }
    }
  return "";
}

}  // namespace starlike
