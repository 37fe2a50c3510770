#pragma once

#include "bonnet/graph/canonical.hpp"
#include "bonnet/graph/graph.hpp"
#include "bonnet/linalg/chain_complex.hpp"
#include "bonnet/operad/port_tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace bonnet::operad {

struct LabelEdge {
  int vertex;
  Mask split;
  friend bool operator==(const LabelEdge&, const LabelEdge&) = default;
};

// An outer graph whose vertices carry Bar(Comm) labels. The ports of a vertex
// are its half-edges in ascending order. `ordering` lists every label edge
// once; it is the orientation.
struct LabelledGraph {
  graph::Graph outer;
  std::vector<PortTree> labels;
  std::vector<LabelEdge> ordering;

  int degree() const { return static_cast<int>(ordering.size()); }
};

// No split of the label may separate the two half-edges of a torus loop.
bool respects_tori(const graph::Graph& g, int v, const PortTree& t);

// Throws std::invalid_argument on inconsistent labels or ordering.
void validate(const LabelledGraph& x);

// Labels with the vertex's splits in ascending order, vertex by vertex.
LabelledGraph with_default_ordering(graph::Graph outer, std::vector<PortTree> labels);

// Inserting the label trees at the vertices: label edges become forest edges.
struct ExpandedGraph {
  graph::Graph graph;
  std::vector<int> forest;  // aligned with the ordering
};
ExpandedGraph expand(const LabelledGraph& x);

// Contract an ordered forest; each component becomes a vertex labelled by the
// tree the forest draws on its half-edges.
LabelledGraph contract_labels(const graph::Graph& g, const std::vector<int>& forest_order);

struct Located {
  std::vector<int> code;
  int sign = 1;
  bool vanishes = false;
};
Located locate(const LabelledGraph& x);

// The representative whose orientation is +1 for its code.
LabelledGraph canonical_representative(const LabelledGraph& x);

struct LabelledTerm {
  int coefficient;
  LabelledGraph element;
};
std::vector<LabelledTerm> bar_contractions(const LabelledGraph& x);
std::vector<LabelledTerm> cobar_expansions(const LabelledGraph& x);
std::vector<LabelledTerm> differential(const LabelledGraph& x);

// Outer graph literal followed by labels=[v:tree ...] for internal vertices.
std::string to_literal(const LabelledGraph& x);

struct LabelledComplex {
  linalg::GradedChainComplex complex;
  std::vector<std::vector<LabelledGraph>> basis;  // by degree from 0
  std::map<std::vector<int>, std::pair<int, int>> index;
  std::size_t size() const;
};

// Every admissible labelling of every outer graph, modulo isomorphism and the
// orientation-reversing automorphisms.
LabelledComplex labelled_complex(const std::vector<graph::Graph>& outer_graphs);

// Coefficient vector of an element in the complex: (degree, index, coefficient).
struct Coordinate {
  int degree;
  int index;
  int coefficient;
};
// Empty if the element vanishes. Throws std::out_of_range if unknown.
std::vector<Coordinate> coordinates(const LabelledComplex& c, const LabelledGraph& x, int coefficient = 1);

}  // namespace bonnet::operad
