#pragma once

#include <string>

#include "starlike/homology.hpp"

namespace starlike {

// Homology of the same enhanced-state module with incidence filtered by q = j + k only.
BigradedTable kh_table(const EnhancedComplex& c, Differential w = Differential::d, int jobs = 1);
BigradedTable kh_table(const LinkDiagram& d, Differential w = Differential::d, ComputeOptions opts = {});

// Every star-like matrix entry appears in the Khovanov matrix with the same value, and the
// Khovanov entries between equal (j, k) are exactly the star-like ones. Empty string on success.
std::string check_refinement(const EnhancedComplex& c, Differential w = Differential::d);

// rank_Q Kh_{i,q} <= sum_{j+k=q} rank_Q H_{i,j,k}. Empty string on success.
std::string check_rank_inequality(const BigradedTable& kh, const HomologyTable& star);

// sum_i (-1)^i rank Kh_{i,q} = sum_i (-1)^i sum_{j+k=q} rank H_{i,j,k} for every q.
std::string check_q_euler(const BigradedTable& kh, const HomologyTable& star);

// i -> -i
BigradedTable negate_i(const BigradedTable& t);

}  // namespace starlike
