#pragma once

#include "bonnet/graph/graph.hpp"

#include <vector>

namespace bonnet::graph {

struct Forest {
  std::vector<int> edges;  // sorted edge indices
  friend bool operator==(const Forest&, const Forest&) = default;
};

// Forest edges must be internal, not loops, acyclic, and no component of the
// spanned subgraph may contain two torus base vertices.
bool is_admissible(const Graph& g, const Forest& f);

// All admissible forests, by size then lexicographically.
std::vector<Forest> admissible_forests(const Graph& g);

Graph collapse_forest(const Graph& g, const Forest& f);

// Sign relative to the stored ordering; flipping two entries flips sign.
struct OrientationSign {
  std::vector<int> ordering;
  int sign = 1;
  friend bool operator==(const OrientationSign&, const OrientationSign&) = default;
};

enum class FaceMove { collapse_edge, remove_edge };

// Drops e from the ordering with sign (-1)^position. Both face types carry the
// same sign; the edge renumbering after a collapse is the caller's business.
OrientationSign forest_sign_after(FaceMove move, const OrientationSign& o, int e);

// Parity of the permutation taking `from` to sorted order (entries distinct).
int sort_sign(std::vector<int> from);

}  // namespace bonnet::graph
