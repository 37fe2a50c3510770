#pragma once

#include "bonnet/linalg/sparse_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bonnet::linalg {

// Homologically graded: d lowers degree by one.
class GradedChainComplex {
 public:
  GradedChainComplex() = default;
  // basis[k] is the basis in degree min_degree + k.
  GradedChainComplex(int min_degree, std::vector<std::vector<std::string>> basis);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(basis_.size()) - 1; }
  bool empty() const { return basis_.empty(); }

  std::size_t dim(int degree) const;
  const std::vector<std::string>& basis(int degree) const;

  // d_k : C_k -> C_{k-1}; dim(k-1) rows, dim(k) cols.
  const SparseMatrix& differential(int degree) const;
  void set_differential(int degree, SparseMatrix m);

 private:
  int min_degree_ = 0;
  std::vector<std::vector<std::string>> basis_;
  std::vector<SparseMatrix> d_;
};

struct DdWitness {
  int degree;           // source degree k of d_{k-1} d_k
  std::string source;   // basis tag in degree k
  std::string target;   // basis tag in degree k-2
  Rational value;
};

struct DdReport {
  bool ok = true;
  std::vector<int> degrees_checked;
  std::vector<DdWitness> failures;
};

DdReport verify_dd_zero(const GradedChainComplex& c);

struct BettiEntry {
  int degree;
  std::size_t dim;
  std::size_t rank_out;   // rank of d leaving this degree
  std::size_t betti;
};

// Throws std::domain_error if d∘d ≠ 0. jobs > 1 computes ranks concurrently.
std::vector<BettiEntry> betti(const GradedChainComplex& c, int jobs = 1);

long euler_from_dims(const std::vector<BettiEntry>& b);
long euler_from_betti(const std::vector<BettiEntry>& b);

}  // namespace bonnet::linalg
