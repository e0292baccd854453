#include "starlike/khovanov.hpp"

#include <sstream>

namespace starlike {

BigradedTable kh_table(const EnhancedComplex& c, Differential w, int jobs) {
  auto slices = build_slices(c, w, Grading::Khovanov, jobs);
  auto groups = slice_groups(slices, w == Differential::d ? GroupKind::HomologyD : GroupKind::HomologyDprime, jobs);
  BigradedTable out;
  for (auto& [deg, g] : groups) out[Bidegree{deg.i, deg.j}] = std::move(g);  // slice j holds q
  return out;
}

BigradedTable kh_table(const LinkDiagram& d, Differential w, ComputeOptions opts) {
  EnhancedComplex c(d, opts.cap);
  return kh_table(c, w, opts.jobs);
}

std::string check_refinement(const EnhancedComplex& c, Differential w) {
  for (std::size_t g = 0; g < c.size(); ++g) {
    auto star = c.apply(w, g, Grading::StarLike);
    auto kh = c.apply(w, g, Grading::Khovanov);
    std::vector<Term> bihomogeneous;
    const Generator& src = c.generator(g);
    for (const Term& t : kh) {
      const Generator& tg = c.generator(t.target);
      if (tg.j == src.j && tg.k == src.k) bihomogeneous.push_back(t);
    }
    if (bihomogeneous != star) {
      std::ostringstream os;
      os << "generator " << g << ": star-like terms are not the (j,k)-preserving part of the Khovanov terms";
      return os.str();
    }
  }
  return "";
}

namespace {

std::map<Bidegree, long long> collapsed_ranks(const HomologyTable& star) {
  std::map<Bidegree, long long> out;
  for (const auto& [deg, g] : star) out[Bidegree{deg.i, deg.j + deg.k}] += g.rank;
  return out;
}

}  // namespace

std::string check_rank_inequality(const BigradedTable& kh, const HomologyTable& star) {
  auto bound = collapsed_ranks(star);
  for (const auto& [deg, g] : kh) {
    long long b = bound.count(deg) ? bound.at(deg) : 0;
    if (g.rank > b) {
      std::ostringstream os;
      os << "(i,q)=(" << deg.i << "," << deg.q << "): rank Kh " << g.rank << " exceeds " << b;
      return os.str();
    }
  }
  return "";
}

std::string check_q_euler(const BigradedTable& kh, const HomologyTable& star) {
  std::map<int, long long> a, b;
  for (const auto& [deg, g] : kh) a[deg.q] += ((deg.i & 1) ? -1 : 1) * g.rank;
  for (const auto& [deg, r] : collapsed_ranks(star)) b[deg.q] += ((deg.i & 1) ? -1 : 1) * r;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
  if (a == b) return "";
  for (const auto& [q, v] : a)
    if (!b.count(q) || b.at(q) != v) return "q=" + std::to_string(q) + ": Euler characteristics differ";
  return "star-like Euler characteristic has extra q terms";
}

BigradedTable negate_i(const BigradedTable& t) {
  BigradedTable out;
  for (const auto& [deg, g] : t) out[Bidegree{-deg.i, deg.q}] = g;
  return out;
}

}  // namespace starlike
