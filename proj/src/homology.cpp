#include "starlike/homology.hpp"

#include <sstream>

#include "starlike/bracket.hpp"
#include "starlike/parallel.hpp"

namespace starlike {

std::string to_string(const HomologyGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.rank > 0) {
    os << "Z";
    if (g.rank > 1) os << "^" << g.rank;
    first = false;
  }
  for (const BigInt& t : g.torsion) {
    if (!first) os << " + ";
    first = false;
    os << "Z/" << t;
  }
  if (first) os << "0";
  return os.str();
}

std::map<Tridegree, HomologyGroup> slice_groups(const std::vector<ChainSlice>& slices, GroupKind kind, int jobs) {
  std::vector<std::map<Tridegree, HomologyGroup>> per_slice(slices.size());
  parallel_for(slices.size(), jobs, [&](std::size_t idx) {
    const ChainSlice& s = slices[idx];
    const bool lowers = kind != GroupKind::HomologyDprime;  // the stored matrices lower i for d
    std::map<int, SmithInvariants> snf;
    auto smith_of = [&](int source) -> const SmithInvariants& {
      auto it = snf.find(source);
      if (it != snf.end()) return it->second;
      int target = lowers ? source - 1 : source + 1;
      return snf.emplace(source, smith(s.matrix(source, s.dim(target)))).first->second;
    };
    auto& out = per_slice[idx];
    for (const auto& [deg, basis] : s.basis) {
      const SmithInvariants* in = nullptr;
      const SmithInvariants* leaving = nullptr;
      const SmithInvariants* torsion_from = nullptr;
      switch (kind) {
        case GroupKind::HomologyD:
          leaving = &smith_of(deg);
          in = &smith_of(deg + 1);
          torsion_from = in;
          break;
        case GroupKind::HomologyDprime:
          leaving = &smith_of(deg);
          in = &smith_of(deg - 1);
          torsion_from = in;
          break;
        case GroupKind::CohomologyD:
          // delta^i = (d_{i+1})^T leaves degree i, (d_i)^T enters it
          leaving = &smith_of(deg + 1);
          in = &smith_of(deg);
          torsion_from = in;
          break;
      }
      HomologyGroup g;
      g.rank = static_cast<int>(basis.size()) - leaving->rank - in->rank;
      g.torsion = torsion_from->elementary_divisors();
      if (!g.is_zero()) out[Tridegree{deg, s.j, s.k}] = std::move(g);
    }
  });
  std::map<Tridegree, HomologyGroup> merged;
  for (auto& m : per_slice) merged.merge(m);
  return merged;
}

HomologyTable homology_table(const EnhancedComplex& c, Differential w, int jobs) {
  auto slices = build_slices(c, w, Grading::StarLike, jobs);
  return slice_groups(slices, w == Differential::d ? GroupKind::HomologyD : GroupKind::HomologyDprime, jobs);
}

HomologyTable homology_table(const LinkDiagram& d, Differential w, ComputeOptions opts) {
  EnhancedComplex c(d, opts.cap);
  return homology_table(c, w, opts.jobs);
}

HomologyTable cohomology_table(const EnhancedComplex& c, int jobs) {
  auto slices = build_slices(c, Differential::d, Grading::StarLike, jobs);
  return slice_groups(slices, GroupKind::CohomologyD, jobs);
}

HomologyTable cohomology_table(const LinkDiagram& d, ComputeOptions opts) {
  EnhancedComplex c(d, opts.cap);
  return cohomology_table(c, opts.jobs);
}

HomologyTable negate_gradings(const HomologyTable& t) {
  HomologyTable out;
  for (const auto& [deg, g] : t) out[Tridegree{-deg.i, -deg.j, -deg.k}] = g;
  return out;
}

BigradedTable collapse_grading(const HomologyTable& t) {
  BigradedTable out;
  for (const auto& [deg, g] : t) {
    HomologyGroup& h = out[Bidegree{deg.i, deg.j + deg.k}];
    h.rank += g.rank;
    h.torsion.insert(h.torsion.end(), g.torsion.begin(), g.torsion.end());
    std::sort(h.torsion.begin(), h.torsion.end());
  }
  return out;
}

namespace {

Coeff sign_of(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

BiLaurent euler_characteristic(const HomologyTable& t) {
  BiLaurent out;
  for (const auto& [deg, g] : t) out.add_term(2 * deg.j, deg.k, sign_of(deg.i + deg.j) * g.rank);
  return out;
}

BiLaurent euler_characteristic_ah(const HomologyTable& t) {
  BiLaurent out;
  for (const auto& [deg, g] : t) out.add_term(2 * deg.j, 2 * deg.k, sign_of(deg.i + deg.j + deg.k) * g.rank);
  return out;
}

BiLaurent chain_euler_characteristic(const EnhancedComplex& c) {
  BiLaurent out;
  for (const Generator& g : c.generators()) out.add_term(2 * g.j, 2 * g.k, sign_of(g.i + g.j + g.k));
  return out;
}

BiLaurent bracket_euler_characteristic(const LinkDiagram& d, int cap, int jobs) {
  return expand_x(chi_poly(v_st(d, cap, jobs)));
}

bool DualityReport::ok() const { return first_failure() == nullptr; }

const DualityCheck* DualityReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

using Entry = std::tuple<std::size_t, std::size_t, long long>;  // row, col, value

std::string describe(const EnhancedComplex& c, std::size_t g) {
  const Generator& x = c.generator(g);
  std::ostringstream os;
  os << "state " << x.state << " labels " << x.labels << " (i,j,k)=(" << x.i << "," << x.j << "," << x.k << ")";
  return os.str();
}

DualityCheck compare_entries(std::string name, std::vector<Entry> lhs, std::vector<Entry> rhs,
                             const EnhancedComplex& c) {
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  DualityCheck chk{std::move(name), lhs == rhs, ""};
  if (!chk.passed) {
    std::size_t k = 0;
    while (k < lhs.size() && k < rhs.size() && lhs[k] == rhs[k]) ++k;
    const Entry& e = k < lhs.size() ? lhs[k] : rhs[k];
    std::ostringstream os;
    os << "first mismatch at row " << std::get<0>(e) << " col " << std::get<1>(e) << " source "
       << describe(c, std::get<1>(e));
    chk.detail = os.str();
  }
  return chk;
}

}  // namespace

DualityCheck check_psi(const EnhancedComplex& c) {
  // (U M_d')[r][g] = (-1)^u(r) M_d'[r][g]   and   (M_d^T U)[r][g] = M_d[g][r] (-1)^u(g)
  std::vector<Entry> lhs, rhs;
  for (std::size_t g = 0; g < c.size(); ++g) {
    for (const Term& t : c.apply(Differential::dprime, g))
      lhs.emplace_back(t.target, g, sign_of(c.u_sign(c.generator(t.target).state)) * t.coeff);
    for (const Term& t : c.apply(Differential::d, g))
      rhs.emplace_back(g, t.target, t.coeff * sign_of(c.u_sign(c.generator(t.target).state)));
  }
  return compare_entries("psi intertwines d' with d^T", std::move(lhs), std::move(rhs), c);
}

DualityCheck check_phi(const EnhancedComplex& c, const EnhancedComplex& m) {
  const int n = c.crossings();
  const std::uint32_t full_state = n == 0 ? 0 : ((std::uint32_t{1} << n) - 1);
  auto phi = [&](std::size_t g) {
    const Generator& x = c.generator(g);
    const std::size_t circles = c.state(x.state).circles.size();
    const std::uint64_t full_labels = (std::uint64_t{1} << circles) - 1;
    return m.index(full_state ^ x.state, full_labels ^ x.labels);
  };
  std::vector<Entry> lhs, rhs;
  for (std::size_t g = 0; g < c.size(); ++g) {
    for (const Term& t : c.apply(Differential::d, g)) lhs.emplace_back(phi(t.target), phi(g), t.coeff);
    for (const Term& t : m.apply(Differential::dprime, phi(g))) rhs.emplace_back(t.target, phi(g), t.coeff);
  }
  return compare_entries("phi intertwines d(D) with d'(mirror D)", std::move(lhs), std::move(rhs), c);
}

namespace {

std::string first_table_difference(const HomologyTable& a, const HomologyTable& b) {
  std::map<Tridegree, std::pair<HomologyGroup, HomologyGroup>> all;
  for (const auto& [k, g] : a) all[k].first = g;
  for (const auto& [k, g] : b) all[k].second = g;
  for (const auto& [k, pr] : all)
    if (!(pr.first == pr.second)) {
      std::ostringstream os;
      os << "(i,j,k)=(" << k.i << "," << k.j << "," << k.k << "): " << to_string(pr.first) << " vs "
         << to_string(pr.second);
      return os.str();
    }
  return "";
}

DualityCheck table_check(std::string name, const HomologyTable& a, const HomologyTable& b) {
  std::string diff = first_table_difference(a, b);
  return DualityCheck{std::move(name), diff.empty(), diff};
}

HomologyTable ranks_only(const HomologyTable& t) {
  HomologyTable out;
  for (const auto& [k, g] : t)
    if (g.rank) out[k] = HomologyGroup{g.rank, {}};
  return out;
}

HomologyTable torsion_only(const HomologyTable& t, int shift) {
  HomologyTable out;
  for (const auto& [k, g] : t)
    if (!g.torsion.empty()) out[Tridegree{k.i + shift, k.j, k.k}] = HomologyGroup{0, g.torsion};
  return out;
}

}  // namespace

DualityReport verify_duality(const LinkDiagram& d, ComputeOptions opts, int torsion_shift) {
  DualityReport rep;
  LinkDiagram dm = mirror(d);
  EnhancedComplex c(d, opts.cap);
  EnhancedComplex cm(dm, opts.cap);
  rep.checks.push_back(check_psi(c));
  rep.checks.push_back(check_psi(cm));
  rep.checks.back().name += " on mirror D";
  rep.checks.push_back(check_phi(c, cm));

  HomologyTable h = homology_table(c, Differential::d, opts.jobs);
  HomologyTable hp_mirror = homology_table(cm, Differential::dprime, opts.jobs);
  HomologyTable co_mirror = cohomology_table(cm, opts.jobs);
  HomologyTable h_mirror = homology_table(cm, Differential::d, opts.jobs);
  rep.checks.push_back(table_check("H(D) = H'(mirror D) negated", h, negate_gradings(hp_mirror)));
  rep.checks.push_back(table_check("H(D) = H^*(mirror D) negated", h, negate_gradings(co_mirror)));
  rep.checks.push_back(
      table_check("rank H(D) = rank H(mirror D) negated", ranks_only(h), ranks_only(negate_gradings(h_mirror))));
  // T H_{i}(D) sits at mirror degree -i + shift, so the mirrored table is moved by +shift after negation.
  auto shift_text = [](int s) { return std::string(s >= 0 ? "+" : "") + std::to_string(s); };
  rep.checks.push_back(table_check("torsion H_{i,j,k}(D) = torsion H_{-i" + shift_text(torsion_shift) + ",-j,-k}(mirror D)",
                                   torsion_only(h, 0), torsion_only(negate_gradings(h_mirror), torsion_shift)));
  HomologyTable hp = homology_table(c, Differential::dprime, opts.jobs);
  rep.checks.push_back(table_check("rank H'(D) = rank H'(mirror D) negated", ranks_only(hp),
                                   ranks_only(negate_gradings(hp_mirror))));
  rep.checks.push_back(table_check("torsion H'_{i,j,k}(D) = torsion H'_{-i+1,-j,-k}(mirror D)", torsion_only(hp, 0),
                                   torsion_only(negate_gradings(hp_mirror), 1)));
  return rep;
}

}  // namespace starlike
