#include "bonnet/moduli/generalized_cobar.hpp"

#include "bonnet/moduli/enumerate.hpp"

namespace bonnet::moduli {

operad::LabelledComplex generalized_cobar(const BoundaryProfile& v) {
  return operad::labelled_complex(enumerate_graphs(v));
}

}  // namespace bonnet::moduli
