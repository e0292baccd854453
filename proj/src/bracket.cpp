#include "starlike/bracket.hpp"

#include <algorithm>
#include <sstream>

#include "starlike/parallel.hpp"

namespace starlike {

GammaElement GammaElement::single(std::string forest, Laurent coeff) {
  GammaElement g;
  g.add(forest, coeff);
  return g;
}

Laurent GammaElement::coeff(const std::string& forest) const {
  auto it = terms_.find(forest);
  return it == terms_.end() ? Laurent() : it->second;
}

void GammaElement::add(const std::string& forest, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(forest, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GammaElement& GammaElement::operator+=(const GammaElement& rhs) {
  for (const auto& [k, v] : rhs.terms_) add(k, v);
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& rhs) {
  for (const auto& [k, v] : rhs.terms_) add(k, -v);
  return *this;
}

GammaElement& GammaElement::operator*=(const Laurent& scalar) {
  Terms out;
  for (auto& [k, v] : terms_) {
    Laurent p = v * scalar;
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

std::string GammaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.to_string() << ")*[" << k << "]";
  }
  return os.str();
}

PartialDiagram PartialDiagram::smooth(int crossing, Smoothing s) const {
  PartialDiagram p = *this;
  p.fixed.at(crossing) = s;
  return p;
}

int PartialDiagram::free_crossings() const {
  int m = 0;
  for (const auto& f : fixed) m += f ? 0 : 1;
  return m;
}

namespace {

constexpr std::uint64_t kChunk = 256;

}  // namespace

GammaElement bracket_st(const PartialDiagram& pd, int cap, int jobs) {
  const LinkDiagram& d = pd.base;
  check_cap(d.crossing_count(), cap);
  std::vector<int> free_idx;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (!pd.fixed[c]) free_idx.push_back(c);
  const int m = static_cast<int>(free_idx.size());
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;

  StateResolver resolver(d);
  std::vector<Laurent> circle_powers(2 * d.crossing_count() + d.free_loops() + 1);
  circle_powers[0] = Laurent(1);
  for (std::size_t k = 1; k < circle_powers.size(); ++k) circle_powers[k] = circle_powers[k - 1] * Laurent::circle_value();

  std::vector<GammaElement> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    std::vector<Smoothing> s(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c)
      if (pd.fixed[c]) s[c] = *pd.fixed[c];
    GammaElement acc;
    const std::uint64_t end = std::min(total, (chunk + 1) * kChunk);
    for (std::uint64_t idx = chunk * kChunk; idx < end; ++idx) {
      int sigma = 0;
      for (int k = 0; k < m; ++k) {
        bool inv = (idx >> (m - 1 - k)) & 1u;
        s[free_idx[k]] = inv ? Smoothing::Ainv : Smoothing::A;
        sigma += inv ? -1 : 1;
      }
      KauffmanState st = resolver.resolve(s);
      acc.add(resolver.nesting_forest(st), Laurent::monomial(sigma) * circle_powers[st.count(CircleType::d)]);
    }
    partial[chunk] = std::move(acc);
  });
  GammaElement out;
  for (auto& g : partial) out += g;
  return out;
}

GammaElement bracket_st(const LinkDiagram& d, int cap, int jobs) { return bracket_st(PartialDiagram(d), cap, jobs); }

Laurent minus_a_power(int k) { return Laurent::monomial(k, (k & 1) ? -1 : 1); }

GammaElement v_st(const LinkDiagram& d, int cap, int jobs) {
  GammaElement g = bracket_st(d, cap, jobs);
  g *= minus_a_power(-3 * writhe(d));
  return g;
}

BiLaurent chi_poly(const GammaElement& g) {
  BiLaurent out;
  for (const auto& [forest, coeff] : g.terms()) {
    int x = forest == kEmptyForest ? 0 : forest_circle_count(forest);
    out += BiLaurent::from_a(coeff, x);
  }
  return out;
}

Laurent collapse_to_kauffman(const BiLaurent& b) { return substitute_x_by_circle(b); }

}  // namespace starlike

namespace starlike {

int writhe(const PartialDiagram& d) {
  int w = 0;
  for (int c = 0; c < d.base.crossing_count(); ++c)
    if (!d.fixed[c]) w += d.base.crossing(c).sign;
  return w;
}

GammaElement v_st(const PartialDiagram& d, int cap, int jobs) {
  GammaElement g = bracket_st(d, cap, jobs);
  g *= minus_a_power(-3 * writhe(d));
  return g;
}

GammaElement skein_recursion_defect(const PartialDiagram& d, int v, int cap) {
  if (v < 0 || v >= d.base.crossing_count() || d.fixed[v])
    throw Error(ErrorCode::MalformedInput, "crossing " + std::to_string(v) + " is not an unsmoothed crossing");
  GammaElement out = bracket_st(d, cap);
  out -= Laurent::monomial(1) * bracket_st(d.smooth(v, Smoothing::A), cap);
  out -= Laurent::monomial(-1) * bracket_st(d.smooth(v, Smoothing::Ainv), cap);
  return out;
}

SkeinTriple skein_triple(const LinkDiagram& d, int v, int cap) {
  if (v < 0 || v >= d.crossing_count()) throw Error(ErrorCode::MalformedInput, "crossing out of range");
  LinkDiagram pos = d.crossing(v).sign > 0 ? d : flip_crossing(d, v);
  LinkDiagram neg = flip_crossing(pos, v);
  // the oriented smoothing of a positive crossing is its A-smoothing
  PartialDiagram zero = PartialDiagram(pos).smooth(v, Smoothing::A);
  return {v_st(pos, cap), v_st(neg, cap), v_st(zero, cap)};
}

GammaElement skein_identity_defect(const SkeinTriple& t, const Laurent& factor) {
  GammaElement out = Laurent::monomial(4) * t.positive;
  out -= Laurent::monomial(-4) * t.negative;
  out -= factor * t.smoothed;
  return out;
}

}  // namespace starlike
