#pragma once

#include "bonnet/cinfty/algebra.hpp"

#include <vector>

namespace bonnet::harrison {

struct OracleEntry {
  int degree;
  std::size_t dim;
  std::size_t betti;
};

// Dense recomputation of H(Torus(A)) up to weight W: own word enumeration,
// own shuffles, a random greedy complement, dense solves and dense rank.
// Only m_2 and δ are allowed; throws std::invalid_argument otherwise.
std::vector<OracleEntry> harrison_oracle(const cinfty::CInftyAlgebra& a, int weight_cap, unsigned seed = 12345);

}  // namespace bonnet::harrison
