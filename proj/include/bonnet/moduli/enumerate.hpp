#pragma once

#include "bonnet/graph/graph.hpp"
#include "bonnet/moduli/profile.hpp"

#include <vector>

namespace bonnet::moduli {

// S_v: connected graphs of profile v with internal valence >= 3, one
// canonical representative per isomorphism class, sorted by literal.
// Throws std::invalid_argument if v is not admissible.
std::vector<graph::Graph> enumerate_graphs(const BoundaryProfile& v);

}  // namespace bonnet::moduli
