#pragma once

#include "bonnet/graph/graph.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace bonnet::moduli {

// v = (g, e_in+e_out, t_in+t_out). g counts loops other than the torus loops.
struct BoundaryProfile {
  int g = 0;
  int e_in = 0, e_out = 0;
  int t_in = 0, t_out = 0;

  int e() const { return e_in + e_out; }
  int t() const { return t_in + t_out; }
  auto operator<=>(const BoundaryProfile&) const = default;
};

// Default split: one outgoing sphere if there is any, every torus outgoing.
BoundaryProfile make_profile(int g, int e, int t);

// "g,e,t" (default split) or "g,i+o,a+b". Throws std::invalid_argument.
BoundaryProfile parse_profile(std::string_view s);
std::string to_string(const BoundaryProfile& v);

// e + t >= 1, not (g = 0, e = 0), not (0,1,0).
bool is_admissible(const BoundaryProfile& v);
void require_admissible(const BoundaryProfile& v);

BoundaryProfile profile_of(const graph::Graph& g);

// Internal vertices have valence >= 3 and the graph has Euler characteristic
// 1 - (g + t), so 3V <= 2(V - 1 + g + t) + e.
int max_internal_vertices(const BoundaryProfile& v);
int max_internal_edges(const BoundaryProfile& v);

}  // namespace bonnet::moduli
