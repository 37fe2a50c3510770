#pragma once

#include "bonnet/graph/graph.hpp"
#include "bonnet/moduli/profile.hpp"
#include "bonnet/operad/labelled_graph.hpp"

#include <string>
#include <vector>

namespace bonnet::moduli {

// One vertex with an outgoing torus loop and incoming leaves 1..n. B(0) is
// flagged bivalent.
graph::Graph bonnet_graph(int n);

// (0, k+0, 0+1): every sphere incoming, the torus outgoing.
BoundaryProfile bonnet_profile(int k);

// Vertex carrying the torus loop; throws std::invalid_argument unless there is
// exactly one torus.
int torus_vertex(const graph::Graph& g);

// Non-loop half-edges at the torus vertex: n for a generator on B(n).
int bonnet_degree(const operad::LabelledGraph& x);

// x = (bonnet with its label) grafted with one open tree per slot. Slots are
// ordered by their least leaf label; leaves inside a slot keep their order.
struct BonnetDecomposition {
  operad::LabelledGraph bonnet;
  std::vector<operad::LabelledGraph> parts;
  std::vector<int> leaf_order;  // composite leaf k+1 is original leaf leaf_order[k]
  int ordering_sign = 1;        // parity of x's label edges against bonnet-then-parts order
};
// Requires genus 0 away from the torus loop and only incoming spheres.
BonnetDecomposition decompose_bonnet(const operad::LabelledGraph& x);
operad::LabelledGraph compose_bonnet(const BonnetDecomposition& d);

struct BonnetReport {
  bool ok = true;
  std::size_t generators = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

// Every term of δx has bonnet degree <= that of x; on B(n) itself the outer
// expansions drop strictly, and δ of a label cycle on B(n) lies strictly lower.
BonnetReport check_bonnet_filtration(int k);

// Every generator of G_(0,k,1) recomposes from its decomposition, same basis
// element and same sign.
BonnetReport check_bonnet_generation(int k);

}  // namespace bonnet::moduli
