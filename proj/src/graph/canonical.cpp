#include "bonnet/graph/canonical.hpp"
#include "bonnet/graph/forest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bonnet::graph {

namespace {

constexpr int kColorStride = 4096;

int torus_code(const std::optional<Label>& l) {
  return l ? 1 + 2 * (l->index - 1) + static_cast<int>(l->side) : 0;
}

struct Search {
  const Graph& g;
  std::vector<int> cls;  // per edge
  std::vector<std::array<int, 3>> init;
  std::vector<int> best;
  std::vector<std::vector<int>> best_orders;

  Search(const Graph& graph, const std::vector<int>& colors) : g(graph) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.num_edges())
      throw std::invalid_argument("edge color vector has wrong length");
    cls.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
      int c = colors.empty() ? 0 : colors[e];
      if (c < 0) throw std::invalid_argument("negative edge color");
      cls[e] = c * kColorStride + torus_code(g.torus_label(e));
    }
    init.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto& l = g.leaf_label(v);
      init[v] = l ? std::array<int, 3>{0, static_cast<int>(l->side), l->index}
                  : std::array<int, 3>{1, g.valence(v), 0};
    }
  }

  std::vector<int> neighbours(int v, const std::vector<int>& colors) const {
    std::vector<int> out;
    out.reserve(2 * g.valence(v));
    std::vector<std::pair<int, int>> p;
    for (int h : g.star(v)) p.emplace_back(cls[g.edge_of(h)], colors[g.vertex_of(g.partner(h))]);
    std::sort(p.begin(), p.end());
    for (auto [a, b] : p) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }

  // Colors are positions: number of vertices with a strictly smaller key.
  static int assign(std::vector<std::pair<std::vector<int>, int>>& keyed, std::vector<int>& colors) {
    std::sort(keyed.begin(), keyed.end());
    int distinct = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) {
        ++distinct;
        colors[keyed[i].second] = static_cast<int>(i);
      } else {
        colors[keyed[i].second] = colors[keyed[i - 1].second];
      }
    }
    return distinct;
  }

  void refine(std::vector<int>& colors) const {
    int n = g.num_vertices();
    int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> keyed(n);
      for (int v = 0; v < n; ++v) {
        keyed[v].first = neighbours(v, colors);
        keyed[v].first.insert(keyed[v].first.begin(), colors[v]);
        keyed[v].second = v;
      }
      int now = assign(keyed, colors);
      if (now == classes) return;
      classes = now;
    }
  }

  std::vector<int> code_for(const std::vector<int>& order) const {
    int n = g.num_vertices();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[order[v]] = v;
    std::vector<int> code{n, g.num_half_edges(), g.allow_bivalent() ? 1 : 0};
    for (int r = 0; r < n; ++r) {
      int v = inv[r];
      code.insert(code.end(), init[v].begin(), init[v].end());
      code.push_back(g.valence(v));
      auto nb = neighbours(v, order);
      code.insert(code.end(), nb.begin(), nb.end());
    }
    return code;
  }

  void run(std::vector<int> colors) {
    refine(colors);
    int n = g.num_vertices();
    std::vector<int> count(n, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      auto code = code_for(colors);
      if (best_orders.empty() || code < best) {
        best = std::move(code);
        best_orders.assign(1, colors);
      } else if (code == best) {
        best_orders.push_back(colors);
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next = colors;
      for (int u = 0; u < n; ++u)
        if (u != v && colors[u] == target) next[u] = target + 1;
      run(std::move(next));
    }
  }
};

Graph graph_from_code(const std::vector<int>& code, std::vector<int>& colors_out) {
  int n = code[0], nh = code[1];
  GraphData d;
  d.allow_bivalent = code[2] != 0;
  d.pairing.assign(nh, -1);
  d.vertices.resize(n);
  struct Slot {
    int cls, nbr, he;
  };
  std::vector<std::vector<Slot>> slots(n);
  std::size_t pos = 3;
  int next = 0;
  for (int r = 0; r < n; ++r) {
    int kind = code[pos], a = code[pos + 1], b = code[pos + 2], val = code[pos + 3];
    pos += 4;
    for (int i = 0; i < val; ++i) {
      slots[r].push_back({code[pos], code[pos + 1], next});
      d.vertices[r].push_back(next++);
      pos += 2;
    }
    if (kind == 0) d.boundary.emplace_back(d.vertices[r][0], Label{static_cast<Side>(a), b});
  }
  for (int r = 0; r < n; ++r) {
    std::map<std::pair<int, int>, std::vector<int>> mine;
    for (const auto& s : slots[r]) mine[{s.cls, s.nbr}].push_back(s.he);
    for (auto& [key, hes] : mine) {
      auto [c, s] = key;
      if (s == r) {
        for (std::size_t i = 0; i + 1 < hes.size(); i += 2) {
          d.pairing[hes[i]] = hes[i + 1];
          d.pairing[hes[i + 1]] = hes[i];
        }
      } else if (s > r) {
        std::vector<int> theirs;
        for (const auto& t : slots[s])
          if (t.cls == c && t.nbr == r) theirs.push_back(t.he);
        for (std::size_t i = 0; i < hes.size(); ++i) {
          d.pairing[hes[i]] = theirs[i];
          d.pairing[theirs[i]] = hes[i];
        }
      }
    }
  }
  std::map<int, int> loop_torus;
  for (int r = 0; r < n; ++r)
    for (const auto& s : slots[r]) {
      int t = s.cls % kColorStride;
      if (t > 0 && s.nbr == r && !loop_torus.count(r)) {
        loop_torus[r] = 1;
        d.tori.emplace_back(s.he, Label{static_cast<Side>((t - 1) % 2), (t - 1) / 2 + 1});
      }
    }
  Graph g = build_graph(d);
  colors_out.assign(g.num_edges(), 0);
  for (int r = 0; r < n; ++r)
    for (const auto& s : slots[r]) colors_out[g.edge_of(s.he)] = s.cls / kColorStride;
  return g;
}

// Matches input edges to canonical edges given a vertex order.
Permutation half_edge_map_for(const Graph& g, const std::vector<int>& cls, const std::vector<int>& order,
                              const Graph& canon, const std::vector<int>& canon_cls) {
  using Key = std::tuple<int, int, int>;
  auto key = [](const Graph& h, int e, int c, auto vmap) {
    auto [u, w] = h.endpoints(e);
    int a = vmap(u), b = vmap(w);
    return Key{std::min(a, b), std::max(a, b), c};
  };
  std::map<Key, std::vector<int>> target;
  for (int e = 0; e < canon.num_edges(); ++e)
    target[key(canon, e, canon_cls[e], [](int v) { return v; })].push_back(e);
  std::map<Key, std::size_t> used;
  Permutation map(g.num_half_edges(), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    Key k = key(g, e, cls[e], [&](int v) { return order[v]; });
    auto it = target.find(k);
    if (it == target.end() || used[k] >= it->second.size())
      throw std::logic_error("canonical edge matching failed");
    int ce = it->second[used[k]++];
    auto [x, y] = g.ends(e);
    auto [cx, cy] = canon.ends(ce);
    if (g.is_loop(e)) {
      map[x] = cx;
      map[y] = cy;
    } else if (order[g.vertex_of(x)] == canon.vertex_of(cx)) {
      map[x] = cx;
      map[y] = cy;
    } else {
      map[x] = cy;
      map[y] = cx;
    }
  }
  return map;
}

}  // namespace

CanonicalForm canonicalize(const Graph& g, const std::vector<int>& edge_colors) {
  Search s(g, edge_colors);
  std::vector<int> colors(g.num_vertices());
  {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    for (int v = 0; v < g.num_vertices(); ++v)
      keyed.push_back({{s.init[v][0], s.init[v][1], s.init[v][2]}, v});
    Search::assign(keyed, colors);
  }
  s.run(colors);
  CanonicalForm out;
  out.code = s.best;
  out.graph = graph_from_code(out.code, out.edge_colors);
  std::vector<int> canon_cls(out.graph.num_edges());
  for (int e = 0; e < out.graph.num_edges(); ++e)
    canon_cls[e] = out.edge_colors[e] * kColorStride + torus_code(out.graph.torus_label(e));
  for (const auto& order : s.best_orders)
    out.half_edge_maps.push_back(half_edge_map_for(g, s.cls, order, out.graph, canon_cls));
  return out;
}

std::vector<int> edge_map(const Graph& from, const Graph& to, const Permutation& half_edges) {
  std::vector<int> m(from.num_edges());
  for (int e = 0; e < from.num_edges(); ++e) m[e] = to.edge_of(half_edges[from.ends(e).first]);
  return m;
}

std::vector<Permutation> automorphism_generators(const Graph& g, const std::vector<int>& edge_colors) {
  auto cf = canonicalize(g, edge_colors);
  const int nh = g.num_half_edges();
  std::vector<Permutation> gens;
  const Permutation& base = cf.half_edge_maps.front();
  Permutation base_inv(nh);
  for (int h = 0; h < nh; ++h) base_inv[base[h]] = h;
  for (std::size_t i = 1; i < cf.half_edge_maps.size(); ++i) {
    Permutation p(nh);
    for (int h = 0; h < nh; ++h) p[h] = base_inv[cf.half_edge_maps[i][h]];
    gens.push_back(std::move(p));
  }
  auto identity = [nh] {
    Permutation p(nh);
    for (int h = 0; h < nh; ++h) p[h] = h;
    return p;
  };
  // Loop flips and swaps of parallel edges with equal colors.
  std::map<std::tuple<int, int, int, int>, std::vector<int>> parallel;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, w] = g.endpoints(e);
    int c = edge_colors.empty() ? 0 : edge_colors[e];
    parallel[{std::min(u, w), std::max(u, w), c, torus_code(g.torus_label(e))}].push_back(e);
    if (g.is_loop(e)) {
      Permutation p = identity();
      auto [x, y] = g.ends(e);
      std::swap(p[x], p[y]);
      gens.push_back(std::move(p));
    }
  }
  for (const auto& [key, es] : parallel) {
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      Permutation p = identity();
      auto [a1, a2] = g.ends(es[i]);
      auto [b1, b2] = g.ends(es[i + 1]);
      if (g.vertex_of(a1) != g.vertex_of(b1)) std::swap(b1, b2);
      p[a1] = b1;
      p[b1] = a1;
      p[a2] = b2;
      p[b2] = a2;
      gens.push_back(std::move(p));
    }
  }
  return gens;
}

std::size_t group_order(const std::vector<Permutation>& gens, int n) {
  Permutation id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::vector<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = std::move(queue.back());
    queue.pop_back();
    for (const auto& s : gens) {
      Permutation q(n);
      for (int i = 0; i < n; ++i) q[i] = s[p[i]];
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return seen.size();
}

}  // namespace bonnet::graph

namespace bonnet::graph {

OrientedCanonical canonicalize_oriented(const Graph& g, const std::vector<int>& ordering) {
  std::vector<int> colors(g.num_edges(), 0);
  for (int e : ordering) colors[e] = 1;
  OrientedCanonical out;
  out.form = canonicalize(g, colors);
  for (int e = 0; e < out.form.graph.num_edges(); ++e)
    if (out.form.edge_colors[e] == 1) out.forest.push_back(e);
  bool first = true;
  for (const auto& hm : out.form.half_edge_maps) {
    std::vector<int> mapped;
    for (int e : ordering) mapped.push_back(out.form.graph.edge_of(hm[g.ends(e).first]));
    int s = sort_sign(mapped);
    if (first) {
      out.sign = s;
      first = false;
    } else if (s != out.sign) {
      out.vanishes = true;
    }
  }
  return out;
}

Glued glue(const Graph& a, const Graph& b, const std::vector<std::pair<Label, Label>>& joins,
           const std::function<Label(Label)>& a_boundary, const std::function<Label(Label)>& b_boundary,
           const std::function<Label(Label)>& a_torus, const std::function<Label(Label)>& b_torus) {
  Glued out;
  std::vector<char> drop_a(a.num_vertices(), 0), drop_b(b.num_vertices(), 0);
  std::vector<std::pair<int, int>> links;  // partner in a, partner in b
  for (auto [la, lb] : joins) {
    int va = a.find_leaf(la), vb = b.find_leaf(lb);
    if (va < 0 || vb < 0) throw std::invalid_argument("glue: missing boundary label");
    if (drop_a[va] || drop_b[vb]) throw std::invalid_argument("glue: label used twice");
    drop_a[va] = drop_b[vb] = 1;
    links.emplace_back(a.partner(a.star(va)[0]), b.partner(b.star(vb)[0]));
  }
  for (auto [pa, pb] : links)
    if (drop_a[a.vertex_of(pa)] || drop_b[b.vertex_of(pb)])
      throw std::invalid_argument("glue: cannot join two boundary edges of one bare edge");
  int next_h = 0, next_v = 0;
  out.a_half_edges.assign(a.num_half_edges(), -1);
  out.b_half_edges.assign(b.num_half_edges(), -1);
  out.a_vertices.assign(a.num_vertices(), -1);
  out.b_vertices.assign(b.num_vertices(), -1);
  for (int h = 0; h < a.num_half_edges(); ++h)
    if (!drop_a[a.vertex_of(h)]) out.a_half_edges[h] = next_h++;
  for (int h = 0; h < b.num_half_edges(); ++h)
    if (!drop_b[b.vertex_of(h)]) out.b_half_edges[h] = next_h++;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (!drop_a[v]) out.a_vertices[v] = next_v++;
  for (int v = 0; v < b.num_vertices(); ++v)
    if (!drop_b[v]) out.b_vertices[v] = next_v++;

  GraphData d;
  d.allow_bivalent = a.allow_bivalent() || b.allow_bivalent();
  d.pairing.assign(next_h, -1);
  d.vertices.resize(next_v);
  auto copy = [&](const Graph& g, const std::vector<int>& hm, const std::vector<int>& vm,
                  const std::function<Label(Label)>& bl, const std::function<Label(Label)>& tl) {
    for (int h = 0; h < g.num_half_edges(); ++h) {
      if (hm[h] < 0) continue;
      if (hm[g.partner(h)] >= 0) d.pairing[hm[h]] = hm[g.partner(h)];
      d.vertices[vm[g.vertex_of(h)]].push_back(hm[h]);
    }
    for (int v = 0; v < g.num_vertices(); ++v)
      if (vm[v] >= 0 && g.leaf_label(v)) d.boundary.emplace_back(hm[g.star(v)[0]], bl(*g.leaf_label(v)));
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.torus_label(e)) d.tori.emplace_back(hm[g.ends(e).first], tl(*g.torus_label(e)));
  };
  copy(a, out.a_half_edges, out.a_vertices, a_boundary, a_torus);
  copy(b, out.b_half_edges, out.b_vertices, b_boundary, b_torus);
  for (auto [pa, pb] : links) {
    int x = out.a_half_edges[pa], y = out.b_half_edges[pb];
    d.pairing[x] = y;
    d.pairing[y] = x;
  }
  out.graph = build_graph(d);
  return out;
}

}  // namespace bonnet::graph
