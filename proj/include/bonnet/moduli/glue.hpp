#pragma once

#include "bonnet/moduli/cells.hpp"
#include "bonnet/moduli/profile.hpp"

#include <string>

namespace bonnet::moduli {

// Out-sphere j of a is glued to in-sphere j of b. Torus labels of b are
// shifted past those of a. Throws std::invalid_argument unless
// a.e_out == b.e_in >= 1.
BoundaryProfile glued_profile(const BoundaryProfile& a, const BoundaryProfile& b);

// Forest F ∪ F', orientation a's edges then b's.
ForestedCell glue_cells(const ForestedCell& a, const ForestedCell& b);

// ∂(a∘b) - ∂a∘b - (-1)^{dim a} a∘∂b; empty means the derivation rule holds.
CellChain derivation_defect(const ForestedCell& a, const ForestedCell& b);

}  // namespace bonnet::moduli
