#pragma once

#include "bonnet/graph/graph.hpp"

#include <string>
#include <string_view>

namespace bonnet::graph {

// graph h=<n> e=[a:b ...] v=[h.h.h ...] in=[k@h ...] out=[k@h ...] tori=[in1@h ...] flags=[bivalent]
// See docs/formats.md. parse_graph(to_literal(g)) == g.
std::string to_literal(const Graph& g);
Graph parse_graph(std::string_view text);

}  // namespace bonnet::graph
