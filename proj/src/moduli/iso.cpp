#include "bonnet/moduli/iso.hpp"

#include "bonnet/moduli/generalized_cobar.hpp"

#include <algorithm>

namespace bonnet::moduli {

IsoReport forest_cobar_iso(const BoundaryProfile& v) { return forest_cobar_iso(xv_complex(v), generalized_cobar(v)); }

IsoReport forest_cobar_iso(const CellComplex& x, const operad::LabelledComplex& g) {
  IsoReport r;
  r.profile = x.profile;
  for (const auto& d : x.cells) r.cell_dims.push_back(d.size());
  for (const auto& d : g.basis) r.cobar_dims.push_back(d.size());
  auto fail = [&](std::string s) {
    r.ok = false;
    r.mismatches.push_back(std::move(s));
  };
  const std::size_t top = std::max(x.cells.size(), g.basis.size());
  std::vector<linalg::SparseMatrix> phi;
  for (std::size_t k = 0; k < top; ++k) {
    const int nx = k < x.cells.size() ? static_cast<int>(x.cells[k].size()) : 0;
    const int ng = k < g.basis.size() ? static_cast<int>(g.basis[k].size()) : 0;
    if (nx != ng) fail("degree " + std::to_string(k) + ": " + std::to_string(nx) + " cells vs " + std::to_string(ng) + " generators");
    phi.emplace_back(ng, nx);
    std::vector<int> hit(ng, 0);
    for (int j = 0; j < nx; ++j) {
      const auto& c = x.cells[k][j];
      std::vector<operad::Coordinate> co;
      try {
        co = operad::coordinates(g, operad::contract_labels(c.graph, c.forest));
      } catch (const std::out_of_range&) {
        fail("no generator for cell: " + cell_line(c));
        continue;
      }
      if (co.size() != 1 || co[0].degree != static_cast<int>(k)) {
        fail("cell maps to zero or the wrong degree: " + cell_line(c));
        continue;
      }
      hit[co[0].index]++;
      phi[k].set(co[0].index, j, co[0].coefficient);
    }
    for (int i = 0; i < ng; ++i)
      if (hit[i] != 1) fail("generator hit " + std::to_string(hit[i]) + " times: " + operad::to_literal(g.basis[k][i]));
  }
  if (!r.ok) return r;
  for (std::size_t k = 1; k < top; ++k) {
    auto lhs = linalg::multiply(phi[k - 1], x.complex.differential(static_cast<int>(k)));
    auto rhs = linalg::multiply(g.complex.differential(static_cast<int>(k)), phi[k]);
    if (!(lhs == rhs)) {
      for (int j = 0; j < lhs.cols(); ++j)
        for (int i = 0; i < lhs.rows(); ++i)
          if (lhs.at(i, j) != rhs.at(i, j)) {
            fail("differentials differ at degree " + std::to_string(k) + " on " + cell_line(x.cells[k][j]));
            i = lhs.rows();
            j = lhs.cols();
          }
    }
  }
  return r;
}

}  // namespace bonnet::moduli
