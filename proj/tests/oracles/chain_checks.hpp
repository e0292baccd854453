#pragma once

#include <string>

#include "starlike/complex.hpp"

namespace oracle {

// Empty when w∘w vanishes on every generator, else the first offending generator.
inline std::string square_defect(const starlike::EnhancedComplex& c, starlike::Differential w,
                                 starlike::Grading g = starlike::Grading::StarLike) {
  for (std::size_t x = 0; x < c.size(); ++x) {
    starlike::Chain once = c.apply(w, starlike::Chain{{x, 1}}, g);
    for (const auto& [t, v] : c.apply(w, once, g))
      if (v != 0) return "generator " + std::to_string(x) + " maps to a nonzero chain under " + to_string(w) + "^2";
  }
  return "";
}

// Checks the partial maps at crossings u and v anticommute (u == v: square to zero).
inline std::string anticommutation_defect(const starlike::EnhancedComplex& c, starlike::Differential w) {
  auto partial_chain = [&](const starlike::Chain& in, int v) {
    starlike::Chain out;
    for (const auto& [g, a] : in)
      for (const starlike::Term& t : c.partial(w, g, v)) out[t.target] += a * t.coeff;
    return out;
  };
  for (std::size_t x = 0; x < c.size(); ++x)
    for (int u = 0; u < c.crossings(); ++u) {
      starlike::Chain pu = partial_chain({{x, 1}}, u);
      for (int v = u; v < c.crossings(); ++v) {
        starlike::Chain sum = partial_chain(pu, v);
        for (const auto& [t, a] : partial_chain(partial_chain({{x, 1}}, v), u)) sum[t] += a;
        for (const auto& [t, a] : sum)
          if (a != 0)
            return "generator " + std::to_string(x) + ": partials at " + std::to_string(u) + " and " +
                   std::to_string(v) + " do not anticommute";
      }
    }
  return "";
}

}  // namespace oracle
