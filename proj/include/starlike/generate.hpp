#pragma once

#include <cstdint>
#include <vector>

#include "starlike/diagram.hpp"

namespace starlike {

// Seeded random connected diagram with exactly `crossings` crossings. Grown from the unknot by
// kinks and unsmoothings, then crossings are flipped at random and a random face is made outer.
LinkDiagram random_diagram(int crossings, std::uint64_t seed);

// Uniformly random crossing ordering.
std::vector<int> random_label_order(int crossings, std::uint64_t seed);

}  // namespace starlike
