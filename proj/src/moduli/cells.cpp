#include "bonnet/moduli/cells.hpp"

#include "bonnet/graph/canonical.hpp"
#include "bonnet/graph/forest.hpp"
#include "bonnet/graph/literal.hpp"
#include "bonnet/moduli/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bonnet::moduli {

CanonicalCell canonical_cell(const ForestedCell& c) {
  auto oc = graph::canonicalize_oriented(c.graph, c.forest);
  return {std::move(oc.form.code), {std::move(oc.form.graph), std::move(oc.forest)}, oc.sign, oc.vanishes};
}

std::vector<CellTerm> raw_boundary(const ForestedCell& c) {
  std::vector<CellTerm> out;
  for (std::size_t p = 0; p < c.forest.size(); ++p) {
    const int e = c.forest[p];
    const int sign = p % 2 ? -1 : 1;
    auto r = graph::collapse_edge_mapped(c.graph, e);
    ForestedCell collapsed{std::move(r.graph), {}};
    ForestedCell removed{c.graph, {}};
    for (int f : c.forest) {
      if (f == e) continue;
      collapsed.forest.push_back(r.edge_map[f]);
      removed.forest.push_back(f);
    }
    out.push_back({sign, std::move(collapsed)});
    out.push_back({sign, std::move(removed)});
  }
  return out;
}

void accumulate(CellChain& chain, const ForestedCell& c, int coefficient) {
  auto cc = canonical_cell(c);
  if (cc.vanishes || coefficient == 0) return;
  int& x = chain[cc.code];
  x += coefficient * cc.sign;
  if (x == 0) chain.erase(cc.code);
}

std::vector<CellTerm> cell_boundary(const ForestedCell& c) {
  std::map<std::vector<int>, CellTerm> acc;
  for (auto& t : raw_boundary(c)) {
    auto cc = canonical_cell(t.cell);
    if (cc.vanishes) continue;
    auto it = acc.find(cc.code);
    if (it == acc.end())
      acc.emplace(cc.code, CellTerm{t.coefficient * cc.sign, std::move(cc.cell)});
    else
      it->second.coefficient += t.coefficient * cc.sign;
  }
  std::vector<CellTerm> out;
  for (auto& [code, t] : acc)
    if (t.coefficient != 0) out.push_back(std::move(t));
  return out;
}

namespace {

std::vector<std::vector<ForestedCell>> cells_by_dimension(const BoundaryProfile& v,
                                                          std::map<std::vector<int>, std::pair<int, int>>& index) {
  std::map<std::vector<int>, ForestedCell> found;
  for (const auto& g : enumerate_graphs(v))
    for (const auto& f : graph::admissible_forests(g)) {
      auto cc = canonical_cell({g, f.edges});
      if (!cc.vanishes) found.emplace(std::move(cc.code), std::move(cc.cell));
    }
  std::vector<std::vector<std::pair<std::string, std::vector<int>>>> keyed;
  for (const auto& [code, c] : found) {
    if (static_cast<int>(keyed.size()) <= c.dimension()) keyed.resize(c.dimension() + 1);
    keyed[c.dimension()].emplace_back(cell_line(c), code);
  }
  std::vector<std::vector<ForestedCell>> out(keyed.size());
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    std::sort(keyed[k].begin(), keyed[k].end());
    for (auto& [line, code] : keyed[k]) {
      index[code] = {static_cast<int>(k), static_cast<int>(out[k].size())};
      out[k].push_back(std::move(found.at(code)));
    }
  }
  return out;
}

}  // namespace

std::vector<ForestedCell> enumerate_cells(const BoundaryProfile& v) {
  std::map<std::vector<int>, std::pair<int, int>> index;
  std::vector<ForestedCell> out;
  for (auto& dim : cells_by_dimension(v, index))
    for (auto& c : dim) out.push_back(std::move(c));
  return out;
}

std::size_t CellComplex::size() const {
  std::size_t n = 0;
  for (const auto& d : cells) n += d.size();
  return n;
}

CellComplex xv_complex(const BoundaryProfile& v) {
  CellComplex c;
  c.profile = v;
  c.cells = cells_by_dimension(v, c.index);
  std::vector<std::vector<std::string>> tags;
  for (const auto& dim : c.cells) {
    tags.emplace_back();
    for (const auto& cell : dim) tags.back().push_back(cell_line(cell));
  }
  c.complex = linalg::GradedChainComplex(0, std::move(tags));
  for (int k = 1; k < static_cast<int>(c.cells.size()); ++k) {
    linalg::SparseMatrix d(static_cast<int>(c.cells[k - 1].size()), static_cast<int>(c.cells[k].size()));
    for (int j = 0; j < static_cast<int>(c.cells[k].size()); ++j)
      for (const auto& t : raw_boundary(c.cells[k][j])) {
        auto cc = canonical_cell(t.cell);
        if (cc.vanishes) continue;
        auto it = c.index.find(cc.code);
        if (it == c.index.end()) throw std::logic_error("face outside the enumeration: " + cell_line(t.cell));
        d.add(it->second.second, j, t.coefficient * cc.sign);
      }
    c.complex.set_differential(k, std::move(d));
  }
  return c;
}

std::string cell_line(const ForestedCell& c) {
  std::ostringstream os;
  os << "dim=" << c.dimension() << " forest=[";
  for (std::size_t i = 0; i < c.forest.size(); ++i) os << (i ? " " : "") << c.forest[i];
  os << "] " << graph::to_literal(c.graph);
  return os.str();
}

std::string dump_cells(const CellComplex& c) {
  std::string out;
  for (const auto& dim : c.cells)
    for (const auto& cell : dim) out += cell_line(cell) + "\n";
  return out;
}

}  // namespace bonnet::moduli
