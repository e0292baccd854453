#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starlike/diagram.hpp"
#include "starlike/error.hpp"
#include "starlike/laurent.hpp"
#include "starlike/resolution.hpp"

namespace starlike {

// Z[A,A^-1]-linear combination of configurations keyed by nesting-forest encoding.
class GammaElement {
 public:
  using Terms = std::map<std::string, Laurent>;

  GammaElement() = default;
  static GammaElement single(std::string forest, Laurent coeff = Laurent(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const std::string& forest) const;

  void add(const std::string& forest, const Laurent& coeff);

  GammaElement& operator+=(const GammaElement& rhs);
  GammaElement& operator-=(const GammaElement& rhs);
  GammaElement& operator*=(const Laurent& scalar);

  friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
  friend GammaElement operator*(const Laurent& s, GammaElement g) { return g *= s; }
  friend bool operator==(const GammaElement&, const GammaElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

// A diagram with some crossings already smoothed. Smoothed crossings keep their marked points
// but contribute nothing to sigma.
struct PartialDiagram {
  LinkDiagram base;
  std::vector<std::optional<Smoothing>> fixed;

  explicit PartialDiagram(LinkDiagram d) : base(std::move(d)), fixed(base.crossing_count()) {}
  PartialDiagram smooth(int crossing, Smoothing s) const;
  int free_crossings() const;
};

GammaElement bracket_st(const LinkDiagram& d, int cap = kDefaultCap, int jobs = 1);
GammaElement bracket_st(const PartialDiagram& d, int cap = kDefaultCap, int jobs = 1);

// (-A)^(-3w) <D>_st
GammaElement v_st(const LinkDiagram& d, int cap = kDefaultCap, int jobs = 1);

// (-A)^k
Laurent minus_a_power(int k);

// Replaces each configuration by X^(number of circles).
BiLaurent chi_poly(const GammaElement& g);

// X -> -A^2 - A^-2.
Laurent collapse_to_kauffman(const BiLaurent& b);

}  // namespace starlike

namespace starlike {

// Writhe over the crossings that are still unsmoothed.
int writhe(const PartialDiagram& d);
GammaElement v_st(const PartialDiagram& d, int cap = kDefaultCap, int jobs = 1);

// <D>_st - A <D_0>_st - A^-1 <D_1>_st for smoothings at crossing v; zero when the recursion holds.
GammaElement skein_recursion_defect(const PartialDiagram& d, int v, int cap = kDefaultCap);

// V_st of the diagram with crossing v made positive, made negative, and Seifert-smoothed.
struct SkeinTriple {
  GammaElement positive, negative, smoothed;
};
SkeinTriple skein_triple(const LinkDiagram& d, int v, int cap = kDefaultCap);

// A^4 V(+) - A^-4 V(-) - factor V(0).
GammaElement skein_identity_defect(const SkeinTriple& t, const Laurent& factor);

}  // namespace starlike
