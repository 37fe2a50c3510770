#include "bonnet/graph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bonnet::graph {

std::string to_string(Label l) {
  return (l.side == Side::in ? "in" : "out") + std::to_string(l.index);
}

bool Graph::is_loop(int e) const {
  auto [a, b] = edge_he_[e];
  return vertex_[a] == vertex_[b];
}

bool Graph::is_boundary(int e) const {
  auto [a, b] = edge_he_[e];
  return is_leaf(vertex_[a]) || is_leaf(vertex_[b]);
}

int Graph::count_boundary(Side s) const {
  int n = 0;
  for (const auto& l : leaf_label_)
    if (l && l->side == s) ++n;
  return n;
}

int Graph::count_tori(Side s) const {
  int n = 0;
  for (const auto& l : torus_label_)
    if (l && l->side == s) ++n;
  return n;
}

int Graph::num_internal_vertices() const {
  int n = 0;
  for (int v = 0; v < num_vertices(); ++v)
    if (!is_leaf(v)) ++n;
  return n;
}

int Graph::find_leaf(Label l) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (leaf_label_[v] == l) return v;
  return -1;
}

int Graph::find_torus(Label l) const {
  for (int e = 0; e < num_edges(); ++e)
    if (torus_label_[e] == l) return e;
  return -1;
}

GraphData Graph::data() const {
  GraphData d;
  d.pairing = pair_;
  d.vertices = star_;
  for (int v = 0; v < num_vertices(); ++v)
    if (leaf_label_[v]) d.boundary.emplace_back(star_[v][0], *leaf_label_[v]);
  for (int e = 0; e < num_edges(); ++e)
    if (torus_label_[e]) d.tori.emplace_back(edge_he_[e].first, *torus_label_[e]);
  d.allow_bivalent = allow_bivalent_;
  return d;
}

namespace {

void check_label_range(const std::vector<Label>& labels, const char* what) {
  for (Side s : {Side::in, Side::out}) {
    std::vector<int> idx;
    for (const auto& l : labels)
      if (l.side == s) idx.push_back(l.index);
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (idx[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument(std::string(what) + " labels must be 1..k on each side");
  }
}

}  // namespace

Graph build_graph(const GraphData& d) {
  const int n = static_cast<int>(d.pairing.size());
  Graph g;
  for (int h = 0; h < n; ++h) {
    int p = d.pairing[h];
    if (p < 0 || p >= n) throw std::invalid_argument("pairing out of range");
    if (p == h) throw std::invalid_argument("pairing has a fixed point");
    if (d.pairing[p] != h) throw std::invalid_argument("pairing is not an involution");
  }
  g.pair_ = d.pairing;
  g.vertex_.assign(n, -1);
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    if (d.vertices[v].empty()) throw std::invalid_argument("empty vertex");
    for (int h : d.vertices[v]) {
      if (h < 0 || h >= n) throw std::invalid_argument("vertex half-edge out of range");
      if (g.vertex_[h] != -1) throw std::invalid_argument("vertices do not partition half-edges");
      g.vertex_[h] = static_cast<int>(v);
    }
    auto s = d.vertices[v];
    std::sort(s.begin(), s.end());
    g.star_.push_back(std::move(s));
  }
  for (int h = 0; h < n; ++h)
    if (g.vertex_[h] == -1) throw std::invalid_argument("half-edge " + std::to_string(h) + " has no vertex");
  g.edge_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (g.edge_[h] != -1) continue;
    g.edge_[h] = g.edge_[g.pair_[h]] = static_cast<int>(g.edge_he_.size());
    g.edge_he_.emplace_back(h, g.pair_[h]);
  }
  g.allow_bivalent_ = d.allow_bivalent;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int val = g.valence(v);
    if (val == 2 && !d.allow_bivalent)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has valence 2");
  }

  g.leaf_label_.assign(g.num_vertices(), std::nullopt);
  std::vector<Label> seen;
  for (const auto& [h, l] : d.boundary) {
    if (h < 0 || h >= n) throw std::invalid_argument("boundary label on missing half-edge");
    int v = g.vertex_[h];
    if (!g.is_leaf(v)) throw std::invalid_argument("label " + to_string(l) + " not on a boundary edge");
    if (g.leaf_label_[v]) throw std::invalid_argument("leaf labelled twice");
    if (l.index < 1) throw std::invalid_argument("labels are 1-based");
    g.leaf_label_[v] = l;
    seen.push_back(l);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.is_leaf(v) && !g.leaf_label_[v])
      throw std::invalid_argument("boundary edge without label at vertex " + std::to_string(v));
  check_label_range(seen, "boundary");

  g.torus_label_.assign(g.num_edges(), std::nullopt);
  seen.clear();
  std::vector<char> base(g.num_vertices(), 0);
  for (const auto& [h, l] : d.tori) {
    if (h < 0 || h >= n) throw std::invalid_argument("torus mark on missing half-edge");
    int e = g.edge_[h];
    if (!g.is_loop(e)) throw std::invalid_argument("torus mark " + to_string(l) + " is not a single-edge cycle");
    if (g.torus_label_[e]) throw std::invalid_argument("loop marked twice");
    int v = g.vertex_[h];
    if (base[v]) throw std::invalid_argument("two tori on one base vertex");
    if (l.index < 1) throw std::invalid_argument("labels are 1-based");
    base[v] = 1;
    g.torus_label_[e] = l;
    seen.push_back(l);
  }
  check_label_range(seen, "torus");
  return g;
}

int num_components(const Graph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.num_vertices();
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    int a = find(u), b = find(w);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

int genus(const Graph& g) { return g.num_edges() - g.num_vertices() + num_components(g); }

Relabelled collapse_edge_mapped(const Graph& g, int e) {
  if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("no such edge");
  if (g.is_loop(e)) throw std::invalid_argument("cannot collapse a loop");
  if (g.is_boundary(e)) throw std::invalid_argument("cannot collapse a boundary edge");
  auto [x, y] = g.ends(e);
  int vx = g.vertex_of(x), vy = g.vertex_of(y);
  int keep = std::min(vx, vy), drop = std::max(vx, vy);

  std::vector<int> hmap(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (h != x && h != y) hmap[h] = next++;
  Relabelled out;
  out.vertex_map.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    out.vertex_map[v] = v == drop ? keep : (v > drop ? v - 1 : v);

  GraphData d;
  d.pairing.resize(next);
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (hmap[h] >= 0) d.pairing[hmap[h]] = hmap[g.partner(h)];
  d.vertices.resize(g.num_vertices() - 1);
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (hmap[h] >= 0) d.vertices[out.vertex_map[g.vertex_of(h)]].push_back(hmap[h]);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.leaf_label(v)) d.boundary.emplace_back(hmap[g.star(v)[0]], *g.leaf_label(v));
  for (int f = 0; f < g.num_edges(); ++f)
    if (g.torus_label(f)) d.tori.emplace_back(hmap[g.ends(f).first], *g.torus_label(f));
  d.allow_bivalent = g.allow_bivalent();
  out.graph = build_graph(d);
  out.edge_map.resize(g.num_edges());
  for (int f = 0; f < g.num_edges(); ++f)
    out.edge_map[f] = f == e ? -1 : out.graph.edge_of(hmap[g.ends(f).first]);
  return out;
}

Graph collapse_edge(const Graph& g, int e) { return collapse_edge_mapped(g, e).graph; }

Graph relabel(const Graph& g, const std::vector<int>& perm, const std::vector<int>& vperm) {
  GraphData d;
  d.pairing.resize(g.num_half_edges());
  for (int h = 0; h < g.num_half_edges(); ++h) d.pairing[perm[h]] = perm[g.partner(h)];
  d.vertices.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int h : g.star(v)) d.vertices[vperm[v]].push_back(perm[h]);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.leaf_label(v)) d.boundary.emplace_back(perm[g.star(v)[0]], *g.leaf_label(v));
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.torus_label(e)) d.tori.emplace_back(perm[g.ends(e).first], *g.torus_label(e));
  d.allow_bivalent = g.allow_bivalent();
  return build_graph(d);
}

}  // namespace bonnet::graph
