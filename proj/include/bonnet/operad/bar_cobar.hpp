#pragma once

#include "bonnet/linalg/chain_complex.hpp"
#include "bonnet/operad/labelled_graph.hpp"
#include "bonnet/operad/port_tree.hpp"

#include <vector>

namespace bonnet::operad {

// Bar(Comm)(n): trees on n leaves plus a root, degree = internal edges,
// d contracts edges with sign (-1)^position.
struct BarComplex {
  linalg::GradedChainComplex complex;
  std::vector<std::vector<PortTree>> basis;
};
BarComplex bar_complex(int n);

// Rooted tree as a graph: port 0 is the root (out1), port p is leaf in p.
graph::Graph tree_graph(const PortTree& t);

// Cobar(Bar(Comm))(n): rooted outer trees with Bar(Comm) labels, flattened.
LabelledComplex cobar_bar_complex(int n);

using CobarBarElement = LabelledGraph;

int arity(const CobarBarElement& x);
CobarBarElement identity_element();
CobarBarElement corolla_element(int n);

// Partial composition: the root of `inner` is grafted onto leaf i of `outer`.
// Leaves are renumbered in order; orientation = outer's, then inner's.
CobarBarElement graft_at(const CobarBarElement& outer, int leaf, const CobarBarElement& inner);

// Full composition: input k goes onto leaf k. Throws on arity mismatch.
CobarBarElement graft(const CobarBarElement& outer, const std::vector<CobarBarElement>& inputs);

}  // namespace bonnet::operad
