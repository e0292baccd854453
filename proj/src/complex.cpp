#include "starlike/complex.hpp"

#include <algorithm>
#include <cassert>

#include "starlike/parallel.hpp"

namespace starlike {

EnhancedComplex::EnhancedComplex(const LinkDiagram& d, int cap) : d_(d), writhe_(starlike::writhe(d)) {
  check_cap(d.crossing_count(), cap);
  states_ = enumerate_states(d_, cap);
  offset_.resize(states_.size() + 1, 0);
  for (std::size_t s = 0; s < states_.size(); ++s)
    offset_[s + 1] = offset_[s] + (std::size_t{1} << states_[s].circles.size());
  gens_.reserve(offset_.back());
  for (std::uint32_t s = 0; s < states_.size(); ++s) {
    const KauffmanState& st = states_[s];
    const int m = static_cast<int>(st.circles.size());
    for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << m); ++labels) {
      int tau_d = 0, tau_h = 0;
      for (int c = 0; c < m; ++c) {
        int v = ((labels >> (m - 1 - c)) & 1u) ? -1 : 1;
        (st.circles[c].type == CircleType::d ? tau_d : tau_h) += v;
      }
      Generator g;
      g.state = s;
      g.labels = labels;
      g.i = (st.sigma - writhe_) / 2;
      g.j = (st.sigma - 3 * writhe_) / 2 + tau_d;
      g.k = tau_h;
      gens_.push_back(g);
    }
  }
}

bool EnhancedComplex::is_minus(std::size_t g, int circle) const {
  const Generator& x = gens_[g];
  const int m = static_cast<int>(states_[x.state].circles.size());
  return (x.labels >> (m - 1 - circle)) & 1u;
}

Smoothing EnhancedComplex::smoothing(std::uint32_t state, int crossing) const {
  return states_[state].smoothing[crossing];
}

int EnhancedComplex::t_minus(std::uint32_t state, int v) const {
  int t = 0;
  for (int c = 0; c < crossings(); ++c)
    if (smoothing(state, c) == Smoothing::Ainv && d_.label(c) > d_.label(v)) ++t;
  return t;
}

int EnhancedComplex::t_plus(std::uint32_t state, int v) const {
  int t = 0;
  for (int c = 0; c < crossings(); ++c)
    if (smoothing(state, c) == Smoothing::A && d_.label(c) > d_.label(v)) ++t;
  return t;
}

int EnhancedComplex::u_sign(std::uint32_t state) const {
  int u = 0;
  for (int c = 0; c < crossings(); ++c)
    if (smoothing(state, c) == Smoothing::A) u += crossings() - d_.label(c);
  return u;
}

EnhancedComplex::Local EnhancedComplex::local(std::uint32_t from, int v) const {
  const int n = crossings();
  Local L;
  L.to = from ^ (std::uint32_t{1} << (n - 1 - v));
  const KauffmanState& a = states_[from];
  const KauffmanState& b = states_[L.to];
  const auto& slots = d_.crossing(v).slots;

  std::vector<bool> touch_a(a.circles.size(), false), touch_b(b.circles.size(), false);
  for (int e : slots) {
    touch_a[a.edge_circle[e]] = true;
    touch_b[b.edge_circle[e]] = true;
  }
  for (std::size_t c = 0; c < b.circles.size(); ++c)
    if (touch_b[c]) L.to_touch.push_back(static_cast<int>(c));

  L.common.assign(a.circles.size(), -1);
  for (std::size_t c = 0; c < a.circles.size(); ++c) {
    if (touch_a[c]) continue;
    auto it = std::lower_bound(b.circles.begin(), b.circles.end(), a.circles[c].id,
                               [](const StateCircle& x, int id) { return x.id < id; });
    if (it != b.circles.end() && it->id == a.circles[c].id && it->edges == a.circles[c].edges)
      L.common[c] = static_cast<int>(it - b.circles.begin());
  }
  return L;
}

namespace {

bool same_grading(const Generator& a, const Generator& b, Grading grading) {
  return grading == Grading::StarLike ? (a.j == b.j && a.k == b.k) : a.q() == b.q();
}

}  // namespace

std::vector<Term> EnhancedComplex::transitions(std::size_t g, int v, Smoothing from, Grading grading,
                                               int sign) const {
  std::vector<Term> out;
  const Generator& src = gens_[g];
  if (smoothing(src.state, v) != from) return out;
  Local L = local(src.state, v);
  const int ma = static_cast<int>(states_[src.state].circles.size());
  const int mb = static_cast<int>(states_[L.to].circles.size());

  std::uint64_t base = 0;
  for (int c = 0; c < ma; ++c) {
    if (L.common[c] < 0) continue;
    if ((src.labels >> (ma - 1 - c)) & 1u) base |= std::uint64_t{1} << (mb - 1 - L.common[c]);
  }
  const int free = static_cast<int>(L.to_touch.size());
  for (int choice = 0; choice < (1 << free); ++choice) {
    std::uint64_t labels = base;
    for (int t = 0; t < free; ++t)
      if ((choice >> t) & 1) labels |= std::uint64_t{1} << (mb - 1 - L.to_touch[t]);
    std::size_t target = index(L.to, labels);
    if (same_grading(src, gens_[target], grading)) out.push_back({target, sign});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.target < b.target; });
  return out;
}

bool EnhancedComplex::incidence(std::size_t s, std::size_t s2, int v, Grading grading) const {
  const Generator& a = gens_[s];
  const Generator& b = gens_[s2];
  if (smoothing(a.state, v) != Smoothing::A) return false;
  Local L = local(a.state, v);
  if (b.state != L.to) return false;
  const int ma = static_cast<int>(states_[a.state].circles.size());
  for (int c = 0; c < ma; ++c) {
    if (L.common[c] < 0) continue;
    if (is_minus(s, c) != is_minus(s2, L.common[c])) return false;
  }
  return same_grading(a, b, grading);
}

std::vector<Term> EnhancedComplex::partial_d(std::size_t g, int v, Grading grading) const {
  int sign = (t_minus(gens_[g].state, v) & 1) ? -1 : 1;
  return transitions(g, v, Smoothing::A, grading, sign);
}

std::vector<Term> EnhancedComplex::partial_dprime(std::size_t g, int v, Grading grading) const {
  int sign = (t_plus(gens_[g].state, v) & 1) ? -1 : 1;
  return transitions(g, v, Smoothing::Ainv, grading, sign);
}

std::vector<Term> EnhancedComplex::partial(Differential w, std::size_t g, int v, Grading grading) const {
  return w == Differential::d ? partial_d(g, v, grading) : partial_dprime(g, v, grading);
}

std::vector<Term> EnhancedComplex::apply(Differential w, std::size_t g, Grading grading) const {
  std::vector<Term> out;
  for (int v = 0; v < crossings(); ++v) {
    auto part = partial(w, g, v, grading);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.target < b.target; });
  std::vector<Term> merged;
  for (const Term& t : out) {
    if (!merged.empty() && merged.back().target == t.target) merged.back().coeff += t.coeff;
    else merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return merged;
}

Chain EnhancedComplex::apply(Differential w, const Chain& c, Grading grading) const {
  Chain out;
  for (const auto& [g, coeff] : c)
    for (const Term& t : apply(w, g, grading)) out[t.target] += coeff * t.coeff;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int ChainSlice::dim(int degree) const {
  auto it = basis.find(degree);
  return it == basis.end() ? 0 : static_cast<int>(it->second.size());
}

Eigen::SparseMatrix<int> ChainSlice::matrix(int source_degree, int target_dim) const {
  auto it = boundary.find(source_degree);
  if (it != boundary.end()) return it->second;
  return Eigen::SparseMatrix<int>(target_dim, dim(source_degree));
}

std::vector<ChainSlice> build_slices(const EnhancedComplex& c, Differential w, Grading grading, int jobs) {
  std::map<std::pair<int, int>, ChainSlice> by_key;
  std::vector<int> position(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Generator& x = c.generator(g);
    std::pair<int, int> key = grading == Grading::StarLike ? std::pair{x.j, x.k} : std::pair{x.q(), 0};
    ChainSlice& s = by_key[key];
    s.j = key.first;
    s.k = key.second;
    auto& b = s.basis[x.i];
    position[g] = static_cast<int>(b.size());
    b.push_back(g);
  }
  std::vector<ChainSlice> slices;
  slices.reserve(by_key.size());
  for (auto& [key, s] : by_key) slices.push_back(std::move(s));

  parallel_for(slices.size(), jobs, [&](std::size_t idx) {
    ChainSlice& s = slices[idx];
    for (const auto& [deg, basis] : s.basis) {
      int tdeg = s.target_degree(w, deg);
      int rows = s.dim(tdeg);
      std::vector<Eigen::Triplet<int>> trip;
      for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const Term& t : c.apply(w, basis[col], grading)) {
          assert(c.generator(t.target).i == tdeg);
          trip.emplace_back(position[t.target], static_cast<int>(col), t.coeff);
        }
      }
      Eigen::SparseMatrix<int> m(rows, static_cast<int>(basis.size()));
      m.setFromTriplets(trip.begin(), trip.end());
      m.makeCompressed();
      s.boundary.emplace(deg, std::move(m));
    }
  });
  return slices;
}

}  // namespace starlike
