#pragma once

#include "qbbw/character.hpp"
#include "qbbw/cohomology.hpp"

#include <json.hpp>

namespace qbbw {

// {"context":[m,n], "terms":[{"weight":[...], "mult":k}, ...]} with terms
// sorted lexicographically by weight; stable enough for golden files.
nlohmann::ordered_json character_to_json(const Character &c);
Character character_from_json(const nlohmann::json &j);

// {"status":"vanishes"} or
// {"status":"concentrated", "degree":k, "w":"[..|..]", "mu":[...],
//  "dimension":"...", "character":{...}}
nlohmann::ordered_json result_to_json(const CohomologyResult &r);
CohomologyResult result_from_json(const nlohmann::json &j);

} // namespace qbbw
