#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/SparseCore>

#include "starlike/diagram.hpp"
#include "starlike/error.hpp"
#include "starlike/resolution.hpp"

namespace starlike {

// StarLike: targets keep (j, k). Khovanov: targets keep q = j + k.
enum class Grading { StarLike, Khovanov };
enum class Differential { d, dprime };

inline const char* to_string(Differential w) { return w == Differential::d ? "d" : "d'"; }

struct Generator {
  std::uint32_t state = 0;
  std::uint64_t labels = 0;  // bit (m-1-c) set means circle c carries '-'
  int i = 0, j = 0, k = 0;

  int q() const { return j + k; }
};

struct Term {
  std::size_t target;
  int coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

using Chain = std::map<std::size_t, long long>;  // sparse formal combination

// All enhanced states of a diagram in canonical order: smoothing index, then label bits.
class EnhancedComplex {
 public:
  explicit EnhancedComplex(const LinkDiagram& d, int cap = kDefaultCap);

  const LinkDiagram& diagram() const { return d_; }
  int crossings() const { return d_.crossing_count(); }
  int writhe() const { return writhe_; }

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(std::size_t g) const { return gens_[g]; }
  std::uint32_t state_count() const { return static_cast<std::uint32_t>(states_.size()); }
  const KauffmanState& state(std::uint32_t s) const { return states_[s]; }
  std::size_t index(std::uint32_t state, std::uint64_t labels) const { return offset_[state] + labels; }

  bool is_minus(std::size_t g, int circle) const;
  Smoothing smoothing(std::uint32_t state, int crossing) const;

  // Count of A^-1 (t_minus) or A (t_plus) crossings of the state with label above v's.
  int t_minus(std::uint32_t state, int v) const;
  int t_plus(std::uint32_t state, int v) const;
  int u_sign(std::uint32_t state) const;

  // [S : S']_v: v is A in S and A^-1 in S', all other smoothings and common circle labels
  // agree, and the gradings match.
  bool incidence(std::size_t s, std::size_t s2, int v, Grading grading = Grading::StarLike) const;

  std::vector<Term> partial_d(std::size_t g, int v, Grading grading = Grading::StarLike) const;
  std::vector<Term> partial_dprime(std::size_t g, int v, Grading grading = Grading::StarLike) const;
  std::vector<Term> partial(Differential w, std::size_t g, int v, Grading grading = Grading::StarLike) const;

  // Full differential, terms sorted by target.
  std::vector<Term> apply(Differential w, std::size_t g, Grading grading = Grading::StarLike) const;
  Chain apply(Differential w, const Chain& c, Grading grading = Grading::StarLike) const;

 private:
  struct Local {
    std::uint32_t to = 0;
    std::vector<int> to_touch;     // circles of the target state meeting v
    std::vector<int> common;       // source circle -> target circle, -1 if it meets v
  };
  Local local(std::uint32_t from, int v) const;
  std::vector<Term> transitions(std::size_t g, int v, Smoothing from, Grading grading, int sign) const;

  LinkDiagram d_;
  int writhe_ = 0;
  std::vector<KauffmanState> states_;
  std::vector<std::size_t> offset_;
  std::vector<Generator> gens_;
};

// A (j, k)-slice (or q-slice when graded by Khovanov, stored as j = q, k = 0) with its basis
// per homological degree and the matrix of the differential leaving each degree.
struct ChainSlice {
  int j = 0, k = 0;
  std::map<int, std::vector<std::size_t>> basis;
  std::map<int, Eigen::SparseMatrix<int>> boundary;  // degree -> (rows: target basis, cols: basis)

  int target_degree(Differential w, int i) const { return w == Differential::d ? i - 1 : i + 1; }
  Eigen::SparseMatrix<int> matrix(int source_degree, int target_dim) const;
  int dim(int degree) const;
};

std::vector<ChainSlice> build_slices(const EnhancedComplex& c, Differential w, Grading grading = Grading::StarLike,
                                     int jobs = 1);

}  // namespace starlike
