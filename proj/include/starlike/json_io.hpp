#pragma once

#include <json.hpp>

#include "starlike/bracket.hpp"
#include "starlike/complex.hpp"
#include "starlike/homology.hpp"
#include "starlike/moves.hpp"

namespace starlike {

using Json = nlohmann::ordered_json;

Json to_json(const Laurent& p);       // [[exp, coeff], ...]
Json to_json(const BiLaurent& p);     // [[a_exp, x_exp, coeff], ...]
Json to_json(const GammaElement& g);  // [[forest, laurent], ...]
Json to_json(const HomologyTable& t);
Json to_json(const BigradedTable& t);
Json to_json(const LinkDiagram& d);   // input schema, with slot_dirs and outer_face
Json to_json(const MoveSite& m);
Json to_json(const std::vector<TrajectoryStep>& trajectory);
Json to_json(const DualityReport& r);

// {sigma, circles: [{id, breaks, seiferts, type}], forest}
Json state_dump(const LinkDiagram& d, const KauffmanState& s);

// {j, k, degrees, matrices: {degree: [[row, col, value], ...]}}
Json slice_dump(const ChainSlice& s, Differential w);

// Accepts the to_json(MoveSite) layout; throws Error(MalformedInput).
MoveSite move_from_json(const Json& j);

// Dense integers, or decimal strings when they do not fit in 64 bits.
Json torsion_json(const std::vector<BigInt>& torsion);

}  // namespace starlike
