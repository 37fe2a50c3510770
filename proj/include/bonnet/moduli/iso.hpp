#pragma once

#include "bonnet/moduli/cells.hpp"
#include "bonnet/moduli/profile.hpp"
#include "bonnet/operad/labelled_graph.hpp"

#include <string>
#include <vector>

namespace bonnet::moduli {

struct IsoReport {
  BoundaryProfile profile;
  bool ok = true;
  std::vector<std::size_t> cell_dims, cobar_dims;
  std::vector<std::string> mismatches;
};

// Contracting the forest of each cell gives a labelled graph; checks this is a
// signed basis bijection in every degree and that it commutes with the
// differentials.
IsoReport forest_cobar_iso(const BoundaryProfile& v);
IsoReport forest_cobar_iso(const CellComplex& x, const operad::LabelledComplex& g);

}  // namespace bonnet::moduli
