#pragma once

#include "bonnet/graph/graph.hpp"
#include "bonnet/linalg/chain_complex.hpp"
#include "bonnet/moduli/profile.hpp"

#include <map>
#include <string>
#include <vector>

namespace bonnet::moduli {

// [G, F] with the forest edges in orientation order.
struct ForestedCell {
  graph::Graph graph;
  std::vector<int> forest;

  int dimension() const { return static_cast<int>(forest.size()); }
};

struct CellTerm {
  int coefficient;
  ForestedCell cell;
};

// Canonical representative (orientation +1) and the sign relating c to it.
// vanishes: the stabilizer of (G, F) acts oddly on F, so [G, F] = 0.
struct CanonicalCell {
  std::vector<int> code;
  ForestedCell cell;
  int sign = 1;
  bool vanishes = false;
};
CanonicalCell canonical_cell(const ForestedCell& c);

// Faces before canonicalization: collapse e and drop e from the forest, both
// with sign (-1)^position.
std::vector<CellTerm> raw_boundary(const ForestedCell& c);

// Faces canonicalized, equal cells combined, zero terms dropped; sorted by code.
std::vector<CellTerm> cell_boundary(const ForestedCell& c);

// Canonical cells of X_v by dimension, then by literal.
std::vector<ForestedCell> enumerate_cells(const BoundaryProfile& v);

struct CellComplex {
  BoundaryProfile profile;
  linalg::GradedChainComplex complex;
  std::vector<std::vector<ForestedCell>> cells;  // by dimension from 0
  std::map<std::vector<int>, std::pair<int, int>> index;
  std::size_t size() const;
};
CellComplex xv_complex(const BoundaryProfile& v);

// "dim=k forest=[e1 e2] graph ..." in orientation order.
std::string cell_line(const ForestedCell& c);
// One line per cell, by dimension then index.
std::string dump_cells(const CellComplex& c);

// Signed chains keyed by canonical code; zero coefficients removed.
using CellChain = std::map<std::vector<int>, int>;
void accumulate(CellChain& chain, const ForestedCell& c, int coefficient);

}  // namespace bonnet::moduli
