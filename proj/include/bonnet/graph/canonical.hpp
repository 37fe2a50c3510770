#pragma once

#include "bonnet/graph/graph.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace bonnet::graph {

using Permutation = std::vector<int>;

struct CanonicalForm {
  // Equal codes <=> isomorphic (boundary labels, torus labels and edge colors preserved).
  std::vector<int> code;
  Graph graph;
  std::vector<int> edge_colors;  // per edge of `graph`
  // One entry per optimal labelling found by the search: input half-edge ->
  // half-edge of `graph`. Two entries differ by an automorphism.
  std::vector<Permutation> half_edge_maps;
  const Permutation& relabelling() const { return half_edge_maps.front(); }
};

// edge_colors: empty, or one non-negative color per edge.
CanonicalForm canonicalize(const Graph& g, const std::vector<int>& edge_colors = {});

// Half-edge permutations generating the label-preserving automorphism group.
std::vector<Permutation> automorphism_generators(const Graph& g, const std::vector<int>& edge_colors = {});

// Order of the group generated by perms of {0..n-1}; closure by breadth-first search.
std::size_t group_order(const std::vector<Permutation>& gens, int n);

// Edge map induced by a half-edge map.
std::vector<int> edge_map(const Graph& from, const Graph& to, const Permutation& half_edges);

}  // namespace bonnet::graph

namespace bonnet::graph {

// Canonical form of a graph with an ordered forest (forest edges colored 1).
struct OrientedCanonical {
  CanonicalForm form;
  std::vector<int> forest;  // canonical forest edges, sorted: the +1 orientation
  int sign = 1;             // orientation of the input ordering relative to `forest`
  bool vanishes = false;    // some automorphism permutes the forest oddly
};

OrientedCanonical canonicalize_oriented(const Graph& g, const std::vector<int>& ordering);

// Glue leaves of a to leaves of b: each pair names a boundary label of a and
// one of b; both leaf vertices disappear and their partners are paired.
// Surviving boundary and torus labels are renamed by the two maps.
struct Glued {
  Graph graph;
  std::vector<int> a_half_edges, b_half_edges;  // old -> new, -1 if removed
  std::vector<int> a_vertices, b_vertices;      // old -> new, -1 if removed
};
Glued glue(const Graph& a, const Graph& b, const std::vector<std::pair<Label, Label>>& joins,
           const std::function<Label(Label)>& a_boundary, const std::function<Label(Label)>& b_boundary,
           const std::function<Label(Label)>& a_torus, const std::function<Label(Label)>& b_torus);

}  // namespace bonnet::graph
