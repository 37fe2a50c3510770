#include "bonnet/moduli/enumerate.hpp"

#include "bonnet/graph/canonical.hpp"
#include "bonnet/graph/literal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bonnet::moduli {

using graph::Graph;
using graph::GraphData;
using graph::Label;
using graph::Side;

namespace {

std::vector<Label> boundary_labels(const BoundaryProfile& v) {
  std::vector<Label> out;
  for (int i = 1; i <= v.e_in; ++i) out.push_back({Side::in, i});
  for (int i = 1; i <= v.e_out; ++i) out.push_back({Side::out, i});
  return out;
}

std::vector<Label> torus_labels(const BoundaryProfile& v) {
  std::vector<Label> out;
  for (int i = 1; i <= v.t_in; ++i) out.push_back({Side::in, i});
  for (int i = 1; i <= v.t_out; ++i) out.push_back({Side::out, i});
  return out;
}

struct Builder {
  GraphData d;
  int add_vertex() {
    d.vertices.emplace_back();
    return static_cast<int>(d.vertices.size()) - 1;
  }
  std::pair<int, int> add_edge(int a, int b) {
    int h = static_cast<int>(d.pairing.size());
    d.pairing.push_back(h + 1);
    d.pairing.push_back(h);
    d.vertices[a].push_back(h);
    d.vertices[b].push_back(h + 1);
    return {h, h + 1};
  }
};

Graph bare_edge(Label x, Label y) {
  Builder b;
  int a = b.add_vertex(), c = b.add_vertex();
  auto [h0, h1] = b.add_edge(a, c);
  b.d.boundary = {{h0, x}, {h1, y}};
  return graph::build_graph(b.d);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

// Calls f on every nondecreasing sequence of length k over [0, n).
template <class F>
void multisets(int n, int k, F&& f) {
  std::vector<int> idx(k, 0);
  if (k > 0 && n == 0) return;
  for (;;) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
  }
}

}  // namespace

std::vector<Graph> enumerate_graphs(const BoundaryProfile& v) {
  require_admissible(v);
  const std::vector<Label> leaves = boundary_labels(v);
  const std::vector<Label> tori = torus_labels(v);
  const int e = v.e(), t = v.t();
  std::map<std::vector<int>, Graph> found;
  auto keep = [&](const Graph& g) {
    auto cf = graph::canonicalize(g);
    found.emplace(std::move(cf.code), std::move(cf.graph));
  };
  if (v.g == 0 && e == 2 && t == 0) keep(bare_edge(leaves[0], leaves[1]));

  const int vmax = max_internal_vertices(v);
  for (int nv = 1; nv <= vmax; ++nv) {
    const int nfree = nv - 1 + v.g;
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < nv; ++a)
      for (int b = a; b < nv; ++b) slots.emplace_back(a, b);
    multisets(static_cast<int>(slots.size()), nfree, [&](const std::vector<int>& pick) {
      std::vector<std::pair<int, int>> edges;
      std::vector<int> base(nv, 0);
      for (int s : pick) {
        edges.push_back(slots[s]);
        base[slots[s].first]++;
        base[slots[s].second]++;
      }
      if (!connected(nv, edges)) return;
      // torus vertices: injective choice
      std::vector<int> tv(t, 0), lv(e, 0);
      auto next_torus = [&]() {
        for (;;) {
          int i = t - 1;
          while (i >= 0 && tv[i] == nv - 1) tv[i--] = 0;
          if (i < 0) return false;
          ++tv[i];
          std::vector<int> s(tv);
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) == s.end()) return true;
        }
      };
      {
        std::vector<int> s(tv);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() && !next_torus()) return;
      }
      do {
        std::vector<int> deg(base);
        for (int x : tv) deg[x] += 2;
        std::fill(lv.begin(), lv.end(), 0);
        for (;;) {
          std::vector<int> d2(deg);
          for (int x : lv) d2[x]++;
          if (std::all_of(d2.begin(), d2.end(), [](int x) { return x >= 3; })) {
            Builder b;
            for (int i = 0; i < nv; ++i) b.add_vertex();
            for (int i = 0; i < e; ++i) {
              int leaf = b.add_vertex();
              auto [h, hl] = b.add_edge(lv[i], leaf);
              (void)h;
              b.d.boundary.emplace_back(hl, leaves[i]);
            }
            for (int i = 0; i < t; ++i) b.d.tori.emplace_back(b.add_edge(tv[i], tv[i]).first, tori[i]);
            for (auto [a, c] : edges) b.add_edge(a, c);
            Graph g = graph::build_graph(b.d);
            if (g.num_edges() - e - t > max_internal_edges(v) - t)
              throw std::logic_error("enumeration bound violated");
            keep(g);
          }
          int i = e - 1;
          while (i >= 0 && lv[i] == nv - 1) lv[i--] = 0;
          if (i < 0) break;
          ++lv[i];
        }
      } while (t > 0 && next_torus());
    });
  }

  std::vector<std::pair<std::string, Graph>> sorted;
  for (auto& [code, g] : found) sorted.emplace_back(graph::to_literal(g), std::move(g));
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [lit, g] : sorted) {
    auto p = profile_of(g);
    if (p != v || g.num_internal_vertices() > max_internal_vertices(v))
      throw std::logic_error("enumerated graph outside profile: " + lit);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace bonnet::moduli
