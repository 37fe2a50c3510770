#include "bonnet/operad/bar_cobar.hpp"

#include "bonnet/operad/tree_literal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bonnet::operad {

using graph::Graph;
using graph::Label;
using graph::Side;

BarComplex bar_complex(int n) {
  if (n < 2) throw std::invalid_argument("bar_complex needs n >= 2");
  BarComplex b;
  std::map<PortTree, std::pair<int, int>> index;
  for (auto& t : enumerate_trees(n + 1)) {
    int deg = t.degree();
    if (static_cast<int>(b.basis.size()) <= deg) b.basis.resize(deg + 1);
    index[t] = {deg, static_cast<int>(b.basis[deg].size())};
    b.basis[deg].push_back(std::move(t));
  }
  std::vector<std::vector<std::string>> tags;
  for (const auto& level : b.basis) {
    tags.emplace_back();
    for (const auto& t : level) tags.back().push_back(to_literal(t));
  }
  b.complex = linalg::GradedChainComplex(0, std::move(tags));
  for (int k = 1; k < static_cast<int>(b.basis.size()); ++k) {
    linalg::SparseMatrix d(static_cast<int>(b.basis[k - 1].size()), static_cast<int>(b.basis[k].size()));
    for (int j = 0; j < static_cast<int>(b.basis[k].size()); ++j) {
      const PortTree& t = b.basis[k][j];
      for (int i = 0; i < t.degree(); ++i)
        d.add(index.at(t.contract(t.splits()[i])).second, j, i % 2 ? -1 : 1);
    }
    b.complex.set_differential(k, std::move(d));
  }
  return b;
}

Graph tree_graph(const PortTree& t) {
  graph::GraphData d;
  const int m = t.ports();
  const int leaves = t.num_nodes();
  d.vertices.resize(leaves + m);
  int next = 0;
  auto edge = [&](int u, int w) {
    d.pairing.push_back(next + 1);
    d.pairing.push_back(next);
    d.vertices[u].push_back(next);
    d.vertices[w].push_back(next + 1);
    next += 2;
  };
  for (int p = 0; p < m; ++p) {
    edge(t.node_of_port(p), leaves + p);
    d.boundary.emplace_back(next - 1, p == 0 ? Label{Side::out, 1} : Label{Side::in, p});
  }
  for (int i = 0; i < t.degree(); ++i) edge(t.parent_node(i), i + 1);
  return graph::build_graph(d);
}

LabelledComplex cobar_bar_complex(int n) {
  if (n < 2) throw std::invalid_argument("cobar_bar_complex needs n >= 2");
  std::vector<Graph> outer;
  for (const auto& t : enumerate_trees(n + 1)) outer.push_back(tree_graph(t));
  return labelled_complex(outer);
}

int arity(const CobarBarElement& x) { return x.outer.count_boundary(Side::in); }

CobarBarElement identity_element() {
  graph::GraphData d;
  d.pairing = {1, 0};
  d.vertices = {{0}, {1}};
  d.boundary = {{0, {Side::in, 1}}, {1, {Side::out, 1}}};
  Graph g = graph::build_graph(d);
  return with_default_ordering(g, {PortTree(1, {}), PortTree(1, {})});
}

CobarBarElement corolla_element(int n) {
  Graph g = tree_graph(PortTree::corolla(n + 1));
  std::vector<PortTree> labels;
  for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(PortTree::corolla(g.valence(v)));
  return with_default_ordering(g, std::move(labels));
}

namespace {

// Carry labels of x across a relabelling of its half-edges and vertices.
void transport(const LabelledGraph& x, const Graph& to, const std::vector<int>& hmap, const std::vector<int>& vmap,
               std::vector<PortTree>& labels, std::vector<LabelEdge>& ordering) {
  const Graph& g = x.outer;
  std::vector<std::vector<int>> perms(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vmap[v] < 0) continue;
    const auto& star = to.star(vmap[v]);
    for (int h : g.star(v))
      perms[v].push_back(static_cast<int>(std::lower_bound(star.begin(), star.end(), hmap[h]) - star.begin()));
    labels[vmap[v]] = x.labels[v].relabel(perms[v]);
  }
  for (const auto& le : x.ordering) {
    Mask m = 0;
    for (int p = 0; p < g.valence(le.vertex); ++p)
      if ((le.split >> p) & 1u) m |= Mask{1} << perms[le.vertex][p];
    ordering.push_back({vmap[le.vertex], normalise(m, to.valence(vmap[le.vertex]))});
  }
}

}  // namespace

CobarBarElement graft_at(const CobarBarElement& outer, int leaf, const CobarBarElement& inner) {
  const int n_out = arity(outer), n_in = arity(inner);
  if (leaf < 1 || leaf > n_out) throw std::invalid_argument("graft: no such leaf");
  auto a_boundary = [&](Label l) {
    if (l.side == Side::in && l.index > leaf) l.index += n_in - 1;
    return l;
  };
  auto b_boundary = [&](Label l) {
    l.index += leaf - 1;
    return l;
  };
  auto same = [](Label l) { return l; };
  auto glued = graph::glue(outer.outer, inner.outer, {{Label{Side::in, leaf}, Label{Side::out, 1}}}, a_boundary,
                           b_boundary, same, same);
  CobarBarElement out;
  out.outer = glued.graph;
  out.labels.resize(out.outer.num_vertices());
  transport(outer, out.outer, glued.a_half_edges, glued.a_vertices, out.labels, out.ordering);
  transport(inner, out.outer, glued.b_half_edges, glued.b_vertices, out.labels, out.ordering);
  validate(out);
  return out;
}

CobarBarElement graft(const CobarBarElement& outer, const std::vector<CobarBarElement>& inputs) {
  if (static_cast<int>(inputs.size()) != arity(outer)) throw std::invalid_argument("graft: arity mismatch");
  CobarBarElement cur = outer;
  int leaf = 1;
  for (const auto& in : inputs) {
    cur = graft_at(cur, leaf, in);
    leaf += arity(in);
  }
  return cur;
}

}  // namespace bonnet::operad
