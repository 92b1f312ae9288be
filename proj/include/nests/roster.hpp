#pragma once

#include <string>

#include "nests/finite_core.hpp"
#include "nests/relation.hpp"
#include "nests/topology.hpp"

namespace nests {

// Set-roster notation with element labels, e.g. "{∅, {x1}, {x1,x2}}".

std::string roster(Subset s, const Universe& u);
std::string roster(const SetFamily& f);
std::string roster(const Topology& t);
/// Pairs as "{(x1,x3), (x2,x3)}".
std::string roster(const Relation& r);

}  // namespace nests
