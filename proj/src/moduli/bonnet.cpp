#include "bonnet/moduli/bonnet.hpp"

#include "bonnet/graph/forest.hpp"
#include "bonnet/linalg/sparse_matrix.hpp"
#include "bonnet/moduli/generalized_cobar.hpp"
#include "bonnet/operad/bar_cobar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bonnet::moduli {

using graph::Graph;
using graph::GraphData;
using graph::Label;
using graph::Side;
using operad::LabelledGraph;
using operad::PortTree;

Graph bonnet_graph(int n) {
  GraphData d;
  d.pairing = {1, 0};
  d.vertices = {{0, 1}};
  d.tori = {{0, {Side::out, 1}}};
  for (int i = 0; i < n; ++i) {
    int h = static_cast<int>(d.pairing.size());
    d.pairing.push_back(h + 1);
    d.pairing.push_back(h);
    d.vertices[0].push_back(h);
    d.vertices.push_back({h + 1});
    d.boundary.emplace_back(h + 1, Label{Side::in, i + 1});
  }
  d.allow_bivalent = n == 0;
  return graph::build_graph(d);
}

BoundaryProfile bonnet_profile(int k) { return {0, k, 0, 0, 1}; }

int torus_vertex(const Graph& g) {
  int found = -1;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e)) {
      if (found >= 0) throw std::invalid_argument("more than one torus");
      found = g.endpoints(e).first;
    }
  if (found < 0) throw std::invalid_argument("no torus");
  return found;
}

int bonnet_degree(const LabelledGraph& x) { return x.outer.valence(torus_vertex(x.outer)) - 2; }

namespace {

struct Slot {
  int half_edge;               // at the torus vertex
  std::vector<int> vertices;   // of the branch, ascending
  std::vector<int> leaves;     // original in-labels, ascending
};

// Subgraph on the half-edges `keep` (ascending, so stars keep their order).
// extra: half-edges that become new leaf vertices with the given labels.
LabelledGraph restrict_to(const LabelledGraph& x, const std::vector<int>& vertices,
                          const std::vector<std::pair<int, Label>>& extra,
                          const std::map<int, Label>& leaf_relabel) {
  const Graph& g = x.outer;
  std::vector<int> keep;
  for (int v : vertices)
    for (int h : g.star(v)) keep.push_back(h);
  for (auto& [h, l] : extra) keep.push_back(h);
  std::sort(keep.begin(), keep.end());
  std::vector<int> hmap(g.num_half_edges(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) hmap[keep[i]] = static_cast<int>(i);
  GraphData d;
  d.pairing.resize(keep.size());
  for (int h : keep) d.pairing[hmap[h]] = hmap[g.partner(h)];
  std::vector<int> vmap(g.num_vertices(), -1);
  for (int v : vertices) {
    vmap[v] = static_cast<int>(d.vertices.size());
    d.vertices.emplace_back();
    for (int h : g.star(v)) d.vertices.back().push_back(hmap[h]);
    if (g.leaf_label(v)) d.boundary.emplace_back(hmap[g.star(v)[0]], leaf_relabel.at(g.leaf_label(v)->index));
  }
  for (auto& [h, l] : extra) {
    d.vertices.push_back({hmap[h]});
    d.boundary.emplace_back(hmap[h], l);
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e) && vmap[g.endpoints(e).first] >= 0) d.tori.emplace_back(hmap[g.ends(e).first], *g.torus_label(e));
  d.allow_bivalent = g.allow_bivalent();
  LabelledGraph y;
  y.outer = graph::build_graph(d);
  y.labels.assign(y.outer.num_vertices(), PortTree(1, {}));
  for (int v : vertices) y.labels[vmap[v]] = x.labels[v];
  for (const auto& le : x.ordering)
    if (vmap[le.vertex] >= 0) y.ordering.push_back({vmap[le.vertex], le.split});
  return y;
}

}  // namespace

BonnetDecomposition decompose_bonnet(const LabelledGraph& x) {
  const Graph& g = x.outer;
  if (g.count_boundary(Side::out) != 0) throw std::invalid_argument("decompose_bonnet: outgoing sphere present");
  const int t = torus_vertex(g);
  if (graph::genus(g) != 1 || graph::num_components(g) != 1)
    throw std::invalid_argument("decompose_bonnet: genus away from the torus");
  std::pair<int, int> loop{-1, -1};
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e)) loop = g.ends(e);
  std::vector<Slot> slots;
  for (int h : g.star(t)) {
    if (h == loop.first || h == loop.second) continue;
    Slot s{h, {}, {}};
    std::vector<int> stack{g.vertex_of(g.partner(h))};
    std::vector<char> seen(g.num_vertices(), 0);
    seen[t] = seen[stack[0]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      s.vertices.push_back(u);
      if (g.leaf_label(u)) s.leaves.push_back(g.leaf_label(u)->index);
      for (int k : g.star(u)) {
        int w = g.vertex_of(g.partner(k));
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.leaves.begin(), s.leaves.end());
    slots.push_back(std::move(s));
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.leaves.front() < b.leaves.front(); });

  BonnetDecomposition d;
  std::vector<std::pair<int, Label>> bonnet_leaves;
  for (std::size_t i = 0; i < slots.size(); ++i)
    bonnet_leaves.emplace_back(g.partner(slots[i].half_edge), Label{Side::in, static_cast<int>(i) + 1});
  d.bonnet = restrict_to(x, {t}, bonnet_leaves, {});
  for (const auto& s : slots) {
    std::map<int, Label> relabel;
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
      relabel[s.leaves[i]] = Label{Side::in, static_cast<int>(i) + 1};
      d.leaf_order.push_back(s.leaves[i]);
    }
    d.parts.push_back(restrict_to(x, s.vertices, {{s.half_edge, Label{Side::out, 1}}}, relabel));
  }
  // position in x.ordering of each label edge, in bonnet-then-parts order
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (int v : slots[i].vertices) owner[v] = static_cast<int>(i);
  std::vector<int> order;
  for (int block = -1; block < static_cast<int>(slots.size()); ++block)
    for (std::size_t p = 0; p < x.ordering.size(); ++p)
      if (owner[x.ordering[p].vertex] == block) order.push_back(static_cast<int>(p));
  d.ordering_sign = graph::sort_sign(order);
  return d;
}

LabelledGraph compose_bonnet(const BonnetDecomposition& d) {
  LabelledGraph y = operad::graft(d.bonnet, d.parts);
  GraphData data = y.outer.data();
  for (auto& [h, l] : data.boundary)
    if (l.side == Side::in) l.index = d.leaf_order.at(l.index - 1);
  y.outer = graph::build_graph(data);
  operad::validate(y);
  return y;
}

BonnetReport check_bonnet_filtration(int k) {
  BonnetReport r;
  const auto c = generalized_cobar(bonnet_profile(k));
  auto fail = [&](std::string s) {
    r.ok = false;
    if (r.failures.size() < 20) r.failures.push_back(std::move(s));
  };
  auto degree_at = [&](const operad::Coordinate& co) { return bonnet_degree(c.basis[co.degree][co.index]); };
  for (const auto& layer : c.basis)
    for (const auto& x : layer) {
      ++r.generators;
      const int n = bonnet_degree(x);
      const bool on_bonnet = x.outer.num_internal_vertices() == 1;
      for (const auto& t : operad::bar_contractions(x))
        for (const auto& co : operad::coordinates(c, t.element, t.coefficient)) {
          ++r.checks;
          if (degree_at(co) != n) fail("label contraction changes bonnet degree: " + operad::to_literal(x));
        }
      for (const auto& t : operad::cobar_expansions(x))
        for (const auto& co : operad::coordinates(c, t.element, t.coefficient)) {
          ++r.checks;
          const int m = degree_at(co);
          if (m > n || (on_bonnet && m == n)) fail("expansion does not lower bonnet degree: " + operad::to_literal(x));
        }
    }

  // label cycles on B(k)
  std::vector<std::vector<int>> on_b(c.basis.size());
  for (std::size_t d = 0; d < c.basis.size(); ++d)
    for (std::size_t i = 0; i < c.basis[d].size(); ++i)
      if (c.basis[d][i].outer.num_internal_vertices() == 1) on_b[d].push_back(static_cast<int>(i));
  for (std::size_t d = 1; d < c.basis.size(); ++d) {
    if (on_b[d].empty()) continue;
    linalg::SparseMatrix m(static_cast<int>(on_b[d - 1].size()), static_cast<int>(on_b[d].size()));
    for (std::size_t j = 0; j < on_b[d].size(); ++j)
      for (const auto& t : operad::bar_contractions(c.basis[d][on_b[d][j]]))
        for (const auto& co : operad::coordinates(c, t.element, t.coefficient)) {
          auto it = std::find(on_b[d - 1].begin(), on_b[d - 1].end(), co.index);
          if (it == on_b[d - 1].end()) {
            fail("label contraction leaves B(k)");
            continue;
          }
          m.add(static_cast<int>(it - on_b[d - 1].begin()), static_cast<int>(j), co.coefficient);
        }
    const auto& delta = c.complex.differential(static_cast<int>(d));
    for (const auto& z : linalg::nullspace(m)) {
      ++r.checks;
      std::vector<linalg::Rational> image(c.basis[d - 1].size());
      for (const auto& [rc, val] : delta.entries()) {
        auto it = std::find(on_b[d].begin(), on_b[d].end(), rc.second);
        if (it != on_b[d].end()) image[rc.first] += val * z[it - on_b[d].begin()];
      }
      for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != 0 && bonnet_degree(c.basis[d - 1][i]) >= k)
          fail("boundary of a label cycle on B(" + std::to_string(k) + ") keeps its degree");
    }
  }
  return r;
}

BonnetReport check_bonnet_generation(int k) {
  BonnetReport r;
  const auto c = generalized_cobar(bonnet_profile(k));
  for (const auto& layer : c.basis)
    for (const auto& x : layer) {
      ++r.generators;
      ++r.checks;
      auto d = decompose_bonnet(x);
      auto y = compose_bonnet(d);
      auto lx = operad::locate(x), ly = operad::locate(y);
      if (lx.code != ly.code || ly.sign != lx.sign * d.ordering_sign) {
        r.ok = false;
        r.failures.push_back("recomposition differs: " + operad::to_literal(x));
      }
    }
  return r;
}

}  // namespace bonnet::moduli
