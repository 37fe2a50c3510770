#include "bonnet/operad/labelled_graph.hpp"

#include "bonnet/graph/literal.hpp"
#include "bonnet/operad/tree_literal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bonnet::operad {

using graph::Graph;
using graph::GraphData;

namespace {

int port_of(const Graph& g, int v, int h) {
  const auto& s = g.star(v);
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), h) - s.begin());
}

Mask mask_of(const Graph& g, int v, const std::vector<int>& half_edges) {
  Mask m = 0;
  for (int h : half_edges) m |= Mask{1} << port_of(g, v, h);
  return normalise(m, g.valence(v));
}

std::vector<int> half_edges_of(const Graph& g, int v, Mask m) {
  std::vector<int> out;
  for (int p = 0; p < g.valence(v); ++p)
    if ((m >> p) & 1u) out.push_back(g.star(v)[p]);
  return out;
}

}  // namespace

bool respects_tori(const Graph& g, int v, const PortTree& t) {
  for (int h : g.star(v)) {
    int e = g.edge_of(h);
    if (!g.torus_label(e)) continue;
    auto [a, b] = g.ends(e);
    if (t.separates(port_of(g, v, a), port_of(g, v, b))) return false;
  }
  return true;
}

void validate(const LabelledGraph& x) {
  const Graph& g = x.outer;
  if (static_cast<int>(x.labels.size()) != g.num_vertices()) throw std::invalid_argument("one label per vertex");
  std::size_t splits = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (x.labels[v].ports() != g.valence(v)) throw std::invalid_argument("label arity differs from valence");
    if (!respects_tori(g, v, x.labels[v])) throw std::invalid_argument("label separates a torus loop");
    splits += x.labels[v].splits().size();
  }
  if (splits != x.ordering.size()) throw std::invalid_argument("ordering does not list every label edge");
  for (std::size_t i = 0; i < x.ordering.size(); ++i) {
    const auto& le = x.ordering[i];
    if (le.vertex < 0 || le.vertex >= g.num_vertices() || x.labels[le.vertex].index_of(le.split) < 0)
      throw std::invalid_argument("ordering names a missing label edge");
    for (std::size_t j = 0; j < i; ++j)
      if (x.ordering[j] == le) throw std::invalid_argument("label edge listed twice");
  }
}

LabelledGraph with_default_ordering(Graph outer, std::vector<PortTree> labels) {
  LabelledGraph x{std::move(outer), std::move(labels), {}};
  for (int v = 0; v < x.outer.num_vertices(); ++v)
    for (Mask s : x.labels[v].splits()) x.ordering.push_back({v, s});
  return x;
}

ExpandedGraph expand(const LabelledGraph& x) {
  const Graph& g = x.outer;
  std::vector<int> base(g.num_vertices() + 1, 0);
  for (int v = 0; v < g.num_vertices(); ++v) base[v + 1] = base[v] + x.labels[v].num_nodes();
  GraphData d = g.data();
  const int nh = g.num_half_edges();
  d.vertices.assign(base.back(), {});
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int p = 0; p < g.valence(v); ++p) d.vertices[base[v] + x.labels[v].node_of_port(p)].push_back(g.star(v)[p]);
  d.pairing.resize(nh + 2 * x.ordering.size());
  for (std::size_t k = 0; k < x.ordering.size(); ++k) {
    const auto& le = x.ordering[k];
    const PortTree& t = x.labels[le.vertex];
    int i = t.index_of(le.split);
    int up = nh + 2 * static_cast<int>(k), down = up + 1;
    d.pairing[up] = down;
    d.pairing[down] = up;
    d.vertices[base[le.vertex] + t.parent_node(i)].push_back(up);
    d.vertices[base[le.vertex] + i + 1].push_back(down);
  }
  ExpandedGraph out{graph::build_graph(d), {}};
  for (std::size_t k = 0; k < x.ordering.size(); ++k) out.forest.push_back(out.graph.edge_of(nh + 2 * static_cast<int>(k)));
  return out;
}

LabelledGraph contract_labels(const Graph& g, const std::vector<int>& forest_order) {
  std::vector<char> in_forest(g.num_edges(), 0);
  for (int e : forest_order) in_forest[e] = 1;
  std::vector<int> comp(g.num_vertices(), -1);
  int ncomp = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int h : g.star(u)) {
        if (!in_forest[g.edge_of(h)]) continue;
        int w = g.vertex_of(g.partner(h));
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> hmap(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (!in_forest[g.edge_of(h)]) hmap[h] = next++;
  GraphData d;
  d.allow_bivalent = g.allow_bivalent();
  d.pairing.resize(next);
  d.vertices.resize(ncomp);
  for (int h = 0; h < g.num_half_edges(); ++h) {
    if (hmap[h] < 0) continue;
    d.pairing[hmap[h]] = hmap[g.partner(h)];
    d.vertices[comp[g.vertex_of(h)]].push_back(hmap[h]);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.leaf_label(v)) d.boundary.emplace_back(hmap[g.star(v)[0]], *g.leaf_label(v));
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e)) d.tori.emplace_back(hmap[g.ends(e).first], *g.torus_label(e));
  LabelledGraph x;
  x.outer = graph::build_graph(d);
  std::vector<int> inv(next);
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (hmap[h] >= 0) inv[hmap[h]] = h;

  std::vector<std::vector<Mask>> splits(ncomp);
  for (int f : forest_order) {
    int c = comp[g.endpoints(f).first];
    // vertices on the far side of f from endpoint a
    std::vector<char> side(g.num_vertices(), 0);
    std::vector<int> stack{g.endpoints(f).first};
    side[stack[0]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int h : g.star(u)) {
        int e = g.edge_of(h);
        if (!in_forest[e] || e == f) continue;
        int w = g.vertex_of(g.partner(h));
        if (!side[w]) {
          side[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> hs;
    for (int h : x.outer.star(c))
      if (side[g.vertex_of(inv[h])]) hs.push_back(h);
    Mask m = mask_of(x.outer, c, hs);
    splits[c].push_back(m);
    x.ordering.push_back({c, m});
  }
  for (int c = 0; c < ncomp; ++c) x.labels.emplace_back(x.outer.valence(c), splits[c]);
  return x;
}

Located locate(const LabelledGraph& x) {
  auto e = expand(x);
  auto oc = graph::canonicalize_oriented(e.graph, e.forest);
  return {std::move(oc.form.code), oc.sign, oc.vanishes};
}

LabelledGraph canonical_representative(const LabelledGraph& x) {
  auto e = expand(x);
  auto oc = graph::canonicalize_oriented(e.graph, e.forest);
  return contract_labels(oc.form.graph, oc.forest);
}

std::vector<LabelledTerm> bar_contractions(const LabelledGraph& x) {
  std::vector<LabelledTerm> out;
  for (std::size_t p = 0; p < x.ordering.size(); ++p) {
    LabelledGraph y = x;
    const auto& le = x.ordering[p];
    y.labels[le.vertex] = x.labels[le.vertex].contract(le.split);
    y.ordering.erase(y.ordering.begin() + p);
    out.push_back({p % 2 ? -1 : 1, std::move(y)});
  }
  return out;
}

std::vector<LabelledTerm> cobar_expansions(const LabelledGraph& x) {
  std::vector<LabelledTerm> out;
  const Graph& g = x.outer;
  const int nh = g.num_half_edges();
  for (std::size_t p = 0; p < x.ordering.size(); ++p) {
    const int v = x.ordering[p].vertex;
    const Mask s = x.ordering[p].split;
    const PortTree& t = x.labels[v];
    std::vector<int> a_he = half_edges_of(g, v, s);
    std::vector<int> b_he = half_edges_of(g, v, full_mask(g.valence(v)) & ~s);
    const int ha = nh, hb = nh + 1;
    GraphData d = g.data();
    d.pairing.push_back(hb);
    d.pairing.push_back(ha);
    d.vertices[v] = b_he;
    d.vertices[v].push_back(hb);
    d.vertices.push_back(a_he);
    d.vertices.back().push_back(ha);
    LabelledGraph y;
    y.outer = graph::build_graph(d);
    const int va = g.num_vertices(), vb = v;
    std::vector<Mask> sa, sb;
    auto moved = [&](Mask u) -> LabelEdge {
      std::vector<int> hs = half_edges_of(g, v, u);
      if ((u & s) == u) return {va, mask_of(y.outer, va, hs)};
      if ((u & s) == 0) return {vb, mask_of(y.outer, vb, hs)};
      std::vector<int> rest;
      for (int h : hs)
        if (!std::binary_search(a_he.begin(), a_he.end(), h)) rest.push_back(h);
      rest.push_back(hb);
      return {vb, mask_of(y.outer, vb, rest)};
    };
    for (Mask u : t.splits()) {
      if (u == s) continue;
      LabelEdge le = moved(u);
      (le.vertex == va ? sa : sb).push_back(le.split);
    }
    y.labels = x.labels;
    y.labels[vb] = PortTree(y.outer.valence(vb), sb);
    y.labels.emplace_back(y.outer.valence(va), sa);
    for (std::size_t q = 0; q < x.ordering.size(); ++q) {
      if (q == p) continue;
      const auto& le = x.ordering[q];
      y.ordering.push_back(le.vertex == v ? moved(le.split) : le);
    }
    out.push_back({p % 2 ? -1 : 1, std::move(y)});
  }
  return out;
}

std::vector<LabelledTerm> differential(const LabelledGraph& x) {
  auto out = bar_contractions(x);
  auto more = cobar_expansions(x);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return out;
}

std::string to_literal(const LabelledGraph& x) {
  std::string s = graph::to_literal(x.outer) + " labels=[";
  bool first = true;
  for (int v = 0; v < x.outer.num_vertices(); ++v) {
    if (x.outer.is_leaf(v)) continue;
    s += (first ? "" : " ") + std::to_string(v) + ":" + (x.labels[v].ports() >= 3 ? to_literal(x.labels[v]) : "-");
    first = false;
  }
  s += "] order=[";
  for (std::size_t i = 0; i < x.ordering.size(); ++i) {
    const auto& le = x.ordering[i];
    s += (i ? " " : "") + std::to_string(le.vertex) + ":" + std::to_string(x.labels[le.vertex].index_of(le.split));
  }
  return s + "]";
}

std::size_t LabelledComplex::size() const {
  std::size_t n = 0;
  for (const auto& b : basis) n += b.size();
  return n;
}

namespace {

std::vector<PortTree> labels_for(const Graph& g, int v) {
  if (g.valence(v) < 3) return {PortTree::corolla(g.valence(v))};
  std::vector<PortTree> out;
  for (auto& t : enumerate_trees(g.valence(v)))
    if (respects_tori(g, v, t)) out.push_back(std::move(t));
  return out;
}

}  // namespace

LabelledComplex labelled_complex(const std::vector<Graph>& outer_graphs) {
  LabelledComplex c;
  for (const Graph& g : outer_graphs) {
    std::vector<std::vector<PortTree>> choices;
    for (int v = 0; v < g.num_vertices(); ++v) choices.push_back(labels_for(g, v));
    std::vector<std::size_t> pick(g.num_vertices(), 0);
    for (;;) {
      std::vector<PortTree> labels;
      for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(choices[v][pick[v]]);
      LabelledGraph x = with_default_ordering(g, std::move(labels));
      auto e = expand(x);
      auto oc = graph::canonicalize_oriented(e.graph, e.forest);
      if (!oc.vanishes && !c.index.count(oc.form.code)) {
        int deg = x.degree();
        if (static_cast<int>(c.basis.size()) <= deg) c.basis.resize(deg + 1);
        c.index[oc.form.code] = {deg, static_cast<int>(c.basis[deg].size())};
        c.basis[deg].push_back(contract_labels(oc.form.graph, oc.forest));
      }
      int v = 0;
      while (v < g.num_vertices() && ++pick[v] == choices[v].size()) pick[v++] = 0;
      if (v == g.num_vertices()) break;
    }
  }
  std::vector<std::vector<std::string>> tags;
  for (const auto& b : c.basis) {
    tags.emplace_back();
    for (const auto& x : b) tags.back().push_back(to_literal(x));
  }
  c.complex = linalg::GradedChainComplex(0, std::move(tags));
  for (int k = 1; k < static_cast<int>(c.basis.size()); ++k) {
    linalg::SparseMatrix d(static_cast<int>(c.basis[k - 1].size()), static_cast<int>(c.basis[k].size()));
    for (int j = 0; j < static_cast<int>(c.basis[k].size()); ++j)
      for (const auto& term : differential(c.basis[k][j]))
        for (const auto& co : coordinates(c, term.element, term.coefficient)) d.add(co.index, j, co.coefficient);
    c.complex.set_differential(k, std::move(d));
  }
  return c;
}

std::vector<Coordinate> coordinates(const LabelledComplex& c, const LabelledGraph& x, int coefficient) {
  Located l = locate(x);
  if (l.vanishes) return {};
  auto it = c.index.find(l.code);
  if (it == c.index.end()) throw std::out_of_range("element not in the complex: " + to_literal(x));
  return {{it->second.first, it->second.second, coefficient * l.sign}};
}

}  // namespace bonnet::operad
