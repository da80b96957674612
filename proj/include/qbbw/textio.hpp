#pragma once

#include "qbbw/rootdata.hpp"
#include "qbbw/weyl.hpp"

namespace qbbw {

// Weight text format: block-delimited integers, "2,0|-1" for (2,0,-1) in
// gl(2|1). The "|" split must match (m, n); surrounding parentheses are
// tolerated on input and produced on output.
Weight parse_weight(const std::string &text, int m, int n);

// Theta-spec text format: "theta+=1,3;theta-=all" with "all" = I', an
// omitted theta0 defaulting to I, and omitted theta+/- defaulting to the
// empty set.
SubalgebraSpec parse_theta(const std::string &text, const RootData &rd);

// One-line permutation pair "[2,1|1]" (1-based images).
WeylElement parse_weyl(const std::string &text);

} // namespace qbbw
