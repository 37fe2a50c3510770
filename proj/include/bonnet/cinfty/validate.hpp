#pragma once

#include "bonnet/cinfty/algebra.hpp"

#include <string>
#include <vector>

namespace bonnet::cinfty {

struct Check {
  std::string axiom;
  int arity;
  bool pass;
  std::vector<std::string> witness;  // basis names of the first failing tuple
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  int arity_checked = 0;  // min(requested, arity cap)
  bool ok() const;
  const Check* first_failure() const;
};

// ∂m_n = Σ ± m_i(…, m_j(…), …) on every basis tuple, 2 <= n <= arity.
ValidationReport check_ainfty(const CInftyAlgebra& a, int max_arity);
// m_n applied to the signed shuffle (x_1..x_p) * (x_{p+1}..x_n), 1 <= p < n.
ValidationReport check_shuffle_vanishing(const CInftyAlgebra& a, int max_arity);
// Graded symmetry of the pairing, then the rotation identity for 2 <= n <= arity.
ValidationReport check_cyclic(const CInftyAlgebra& a, int max_arity);

ValidationReport validate_all(const CInftyAlgebra& a, int max_arity);

}  // namespace bonnet::cinfty
