#include "bonnet/moduli/glue.hpp"

#include "bonnet/graph/canonical.hpp"

#include <stdexcept>

namespace bonnet::moduli {

using graph::Label;
using graph::Side;

BoundaryProfile glued_profile(const BoundaryProfile& a, const BoundaryProfile& b) {
  if (a.e_out != b.e_in || a.e_out < 1)
    throw std::invalid_argument("cannot glue " + to_string(a) + " to " + to_string(b));
  BoundaryProfile v;
  v.g = a.g + b.g + a.e_out - 1;
  v.e_in = a.e_in;
  v.e_out = b.e_out;
  v.t_in = a.t_in + b.t_in;
  v.t_out = a.t_out + b.t_out;
  return v;
}

ForestedCell glue_cells(const ForestedCell& a, const ForestedCell& b) {
  const BoundaryProfile pa = profile_of(a.graph), pb = profile_of(b.graph);
  glued_profile(pa, pb);
  std::vector<std::pair<Label, Label>> joins;
  for (int j = 1; j <= pa.e_out; ++j) joins.push_back({{Side::out, j}, {Side::in, j}});
  auto same = [](Label l) { return l; };
  auto shift = [&](Label l) {
    return Label{l.side, l.index + (l.side == Side::in ? pa.t_in : pa.t_out)};
  };
  auto gl = graph::glue(a.graph, b.graph, joins, same, same, same, shift);
  ForestedCell out{std::move(gl.graph), {}};
  for (int e : a.forest) out.forest.push_back(out.graph.edge_of(gl.a_half_edges[a.graph.ends(e).first]));
  for (int e : b.forest) out.forest.push_back(out.graph.edge_of(gl.b_half_edges[b.graph.ends(e).first]));
  return out;
}

CellChain derivation_defect(const ForestedCell& a, const ForestedCell& b) {
  CellChain chain;
  for (const auto& t : raw_boundary(glue_cells(a, b))) accumulate(chain, t.cell, t.coefficient);
  for (const auto& t : raw_boundary(a)) accumulate(chain, glue_cells(t.cell, b), -t.coefficient);
  const int s = a.dimension() % 2 ? -1 : 1;
  for (const auto& t : raw_boundary(b)) accumulate(chain, glue_cells(a, t.cell), -s * t.coefficient);
  return chain;
}

}  // namespace bonnet::moduli
