#pragma once

#include "bonnet/linalg/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bonnet::linalg {

class SparseMatrix {
 public:
  using Entries = std::map<std::pair<int, int>, Rational>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const Entries& entries() const { return entries_; }

  Rational at(int r, int c) const;
  // Accumulates; entries that cancel to zero are erased.
  void add(int r, int c, const Rational& value);
  void set(int r, int c, const Rational& value);

  // "row col p/q" per line, row-major order.
  std::string dump() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Entries entries_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

std::size_t rank(const SparseMatrix& m);

// Basis of {x : m x = 0} by dense reduced row echelon form; small matrices only.
std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m);

}  // namespace bonnet::linalg
