#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "starlike/complex.hpp"
#include "starlike/laurent.hpp"
#include "starlike/smith.hpp"

namespace starlike {

struct ComputeOptions {
  int cap = kDefaultCap;
  int jobs = 1;
};

// Ordered by (j, k, i), which is also the table output order.
struct Tridegree {
  int i = 0, j = 0, k = 0;
  friend bool operator<(const Tridegree& a, const Tridegree& b) {
    return std::tie(a.j, a.k, a.i) < std::tie(b.j, b.k, b.i);
  }
  friend bool operator==(const Tridegree&, const Tridegree&) = default;
};

// Ordered by (q, i).
struct Bidegree {
  int i = 0, q = 0;
  friend bool operator<(const Bidegree& a, const Bidegree& b) { return std::tie(a.q, a.i) < std::tie(b.q, b.i); }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // sorted prime powers

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& g);

// Only nonzero groups are stored.
using HomologyTable = std::map<Tridegree, HomologyGroup>;
using BigradedTable = std::map<Bidegree, HomologyGroup>;

// Which group a slice computation produces at each degree.
enum class GroupKind { HomologyD, HomologyDprime, CohomologyD };

HomologyTable homology_table(const EnhancedComplex& c, Differential w, int jobs = 1);
HomologyTable homology_table(const LinkDiagram& d, Differential w, ComputeOptions opts = {});

// Cohomology of the complex (C, d): the dual differential raises i.
HomologyTable cohomology_table(const EnhancedComplex& c, int jobs = 1);
HomologyTable cohomology_table(const LinkDiagram& d, ComputeOptions opts = {});

// Groups of every slice, keyed by (slice j, slice k, degree).
std::map<Tridegree, HomologyGroup> slice_groups(const std::vector<ChainSlice>& slices, GroupKind kind, int jobs);

// (i, j, k) -> (-i, -j, -k)
HomologyTable negate_gradings(const HomologyTable& t);

// Sums ranks and merges torsion over j + k = q.
BigradedTable collapse_grading(const HomologyTable& t);

// sum (-1)^i (-A^2)^j X^k rank, with X kept formal (negative exponents allowed).
BiLaurent euler_characteristic(const HomologyTable& t);

// The same sum with X^k realized as (-H^2)^k; the result lives in Z[A^+-1, H^+-1].
BiLaurent euler_characteristic_ah(const HomologyTable& t);

// Chain-level sum over all enhanced states, in (A, H).
BiLaurent chain_euler_characteristic(const EnhancedComplex& c);

// Euler characteristic of the star-like bracket in (A, H): X -> -H^2 - H^-2 applied to chi_poly(v_st).
BiLaurent bracket_euler_characteristic(const LinkDiagram& d, int cap = kDefaultCap, int jobs = 1);

struct DualityCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct DualityReport {
  std::vector<DualityCheck> checks;
  bool ok() const;
  const DualityCheck* first_failure() const;
};

// psi: (-1)^u intertwines d' with the transpose of d on D.
DualityCheck check_psi(const EnhancedComplex& c);
// phi: label inversion intertwines d on D with d' on the mirror.
DualityCheck check_phi(const EnhancedComplex& c, const EnhancedComplex& mirror_c);

// Runs the psi/phi matrix identities, the three-way table isomorphism and the mirror
// corollary (ranks, and torsion with the degree shift `torsion_shift`, i.e.
// T H_{i,j,k}(D) = T H_{-i+shift,-j,-k}(mirror D)).
DualityReport verify_duality(const LinkDiagram& d, ComputeOptions opts = {}, int torsion_shift = 1);

}  // namespace starlike
