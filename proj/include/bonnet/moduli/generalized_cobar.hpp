#pragma once

#include "bonnet/moduli/profile.hpp"
#include "bonnet/operad/labelled_graph.hpp"

namespace bonnet::moduli {

// G_v(Bar(Comm)): S_v graphs with Bar(Comm) vertex labels.
operad::LabelledComplex generalized_cobar(const BoundaryProfile& v);

}  // namespace bonnet::moduli
