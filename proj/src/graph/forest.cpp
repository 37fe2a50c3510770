#include "bonnet/graph/forest.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bonnet::graph {

namespace {

struct Dsu {
  std::vector<int> parent;
  std::vector<int> tori;
  explicit Dsu(const Graph& g) : parent(g.num_vertices()), tori(g.num_vertices(), 0) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.torus_label(e)) tori[g.endpoints(e).first] = 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

bool eligible(const Graph& g, int e) { return g.is_internal(e) && !g.is_loop(e); }

void extend(const Graph& g, const std::vector<int>& cand, std::size_t from, Dsu dsu,
            std::vector<int>& cur, std::vector<Forest>& out) {
  out.push_back({cur});
  for (std::size_t i = from; i < cand.size(); ++i) {
    auto [u, w] = g.endpoints(cand[i]);
    int a = dsu.find(u), b = dsu.find(w);
    if (a == b) continue;
    if (dsu.tori[a] + dsu.tori[b] > 1) continue;
    Dsu next = dsu;
    next.parent[a] = b;
    next.tori[b] += next.tori[a];
    cur.push_back(cand[i]);
    extend(g, cand, i + 1, next, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_admissible(const Graph& g, const Forest& f) {
  if (!std::is_sorted(f.edges.begin(), f.edges.end())) return false;
  if (std::adjacent_find(f.edges.begin(), f.edges.end()) != f.edges.end()) return false;
  Dsu dsu(g);
  for (int e : f.edges) {
    if (e < 0 || e >= g.num_edges() || !eligible(g, e)) return false;
    auto [u, w] = g.endpoints(e);
    int a = dsu.find(u), b = dsu.find(w);
    if (a == b || dsu.tori[a] + dsu.tori[b] > 1) return false;
    dsu.parent[a] = b;
    dsu.tori[b] += dsu.tori[a];
  }
  return true;
}

std::vector<Forest> admissible_forests(const Graph& g) {
  std::vector<int> cand;
  for (int e = 0; e < g.num_edges(); ++e)
    if (eligible(g, e)) cand.push_back(e);
  std::vector<Forest> out;
  std::vector<int> cur;
  extend(g, cand, 0, Dsu(g), cur, out);
  std::stable_sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

Graph collapse_forest(const Graph& g, const Forest& f) {
  if (!is_admissible(g, f)) throw std::invalid_argument("forest is not admissible");
  Graph cur = g;
  std::vector<int> edges = f.edges;
  while (!edges.empty()) {
    auto r = collapse_edge_mapped(cur, edges.back());
    edges.pop_back();
    for (int& e : edges) e = r.edge_map[e];
    cur = std::move(r.graph);
  }
  return cur;
}

OrientationSign forest_sign_after(FaceMove, const OrientationSign& o, int e) {
  auto it = std::find(o.ordering.begin(), o.ordering.end(), e);
  if (it == o.ordering.end()) throw std::invalid_argument("edge not in ordering");
  auto pos = it - o.ordering.begin();
  OrientationSign out = o;
  out.ordering.erase(out.ordering.begin() + pos);
  if (pos % 2) out.sign = -out.sign;
  return out;
}

int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace bonnet::graph
