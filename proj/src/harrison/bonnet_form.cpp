#include "bonnet/harrison/bonnet_form.hpp"

#include "bonnet/moduli/bonnet.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bonnet::harrison {

using graph::Graph;
using graph::Label;
using graph::Side;
using operad::LabelledGraph;

namespace {

void require_strict(const CInftyAlgebra& a) {
  if (a.top_arity() > 2) throw std::invalid_argument("bonnet_representative: operations beyond m_2 are not supported");
}

// Koszul sign of reading the letters of w in the order `order`.
int koszul(const CInftyAlgebra& a, const TensorWord& w, const std::vector<int>& order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j] && (a.degree(w.letters[order[i]]) * a.degree(w.letters[order[j]])) % 2 != 0) sign = -sign;
  return sign;
}

// Tensor product of per-position vectors.
WordChain expand(const std::vector<cinfty::Vector>& slots, const Rational& coef) {
  WordChain out;
  if (coef == 0) return out;
  std::vector<std::pair<TensorWord, Rational>> acc{{TensorWord{}, coef}};
  for (const auto& v : slots) {
    std::vector<std::pair<TensorWord, Rational>> next;
    for (const auto& [w, x] : acc)
      for (const auto& [k, y] : v) {
        TensorWord u = w;
        u.letters.push_back(k);
        next.emplace_back(std::move(u), x * y);
      }
    acc = std::move(next);
  }
  for (const auto& [w, x] : acc) add_to(out, w, x);
  return out;
}

BonnetForm finish(const LabelledGraph& bonnet, const WordChain& word) {
  BonnetForm f;
  auto loc = operad::locate(bonnet);
  f.code = loc.code;
  f.bonnet = operad::canonical_representative(bonnet);
  if (!loc.vanishes) add_to(f.word, word, loc.sign);
  return f;
}

std::vector<int> parents(const Graph& g, int root) {
  std::vector<int> parent(g.num_vertices(), -2);
  parent[root] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int h : g.star(u)) {
      int w = g.vertex_of(g.partner(h));
      if (parent[w] == -2) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  return parent;
}

bool acts(const LabelledGraph& x, int v) { return x.outer.valence(v) == 3 && x.labels[v].degree() == 0; }

}  // namespace

int BonnetForm::degree() const { return moduli::bonnet_degree(bonnet); }

bool same_form(const BonnetForm& a, const BonnetForm& b) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  return a.code == b.code && a.word == b.word;
}

std::string to_string(const CInftyAlgebra& a, const BonnetForm& f) {
  if (f.zero()) return "0";
  return "B(" + std::to_string(f.degree()) + ") " + operad::to_literal(f.bonnet) + " ⊗ [" + to_string(a, f.word) + "]";
}

BonnetForm bonnet_representative(const CInftyAlgebra& a, const LabelledGraph& x, const TensorWord& word) {
  require_strict(a);
  if (word.weight() != x.outer.count_boundary(Side::in))
    throw std::invalid_argument("bonnet_representative: word length differs from the number of leaves");
  const auto d = moduli::decompose_bonnet(x);
  std::vector<int> order;
  for (int l : d.leaf_order) order.push_back(l - 1);
  Rational coef = d.ordering_sign * koszul(a, word, order);
  std::vector<cinfty::Vector> slots;
  std::size_t next = 0;
  for (const auto& part : d.parts) {
    const Graph& g = part.outer;
    const int leaves = g.count_boundary(Side::in);
    int inner = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.is_leaf(v)) continue;
      ++inner;
      if (!acts(part, v)) coef = 0;
    }
    cinfty::Vector acc = cinfty::basis_vector(word.letters[order[next]]);
    for (int i = 1; i < leaves; ++i)
      acc = a.m(std::vector<cinfty::Vector>{acc, cinfty::basis_vector(word.letters[order[next + i]])});
    if (inner % 2 == 0 && inner > 0) coef = -coef;
    next += leaves;
    slots.push_back(std::move(acc));
  }
  return finish(d.bonnet, expand(slots, coef));
}

std::vector<int> absorbable_vertices(const LabelledGraph& x) {
  const Graph& g = x.outer;
  const int t = moduli::torus_vertex(g);
  const auto parent = parents(g, t);
  std::vector<int> out;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (u == t || g.is_leaf(u)) continue;
    bool ok = true;
    for (int h : g.star(u)) {
      int w = g.vertex_of(g.partner(h));
      if (w != parent[u] && !g.is_leaf(w)) ok = false;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

Absorbed absorb_vertex(const CInftyAlgebra& a, const LabelledGraph& x, const WordChain& word, int u) {
  require_strict(a);
  const Graph& g = x.outer;
  const int t = moduli::torus_vertex(g);
  const auto parent = parents(g, t);
  int up = -1;  // half-edge of u towards its parent
  std::vector<int> labels, gone_vertices, gone;
  for (int h : g.star(u)) {
    int w = g.vertex_of(g.partner(h));
    if (w == parent[u]) {
      up = h;
      continue;
    }
    if (!g.is_leaf(w) || !g.leaf_label(w) || g.leaf_label(w)->side != Side::in)
      throw std::invalid_argument("absorb_vertex: vertex has a non-leaf child");
    labels.push_back(g.leaf_label(w)->index);
    gone_vertices.push_back(w);
    gone.push_back(h);
    gone.push_back(g.partner(h));
  }
  if (up < 0 || labels.empty()) throw std::invalid_argument("absorb_vertex: not a pendant vertex");
  std::sort(labels.begin(), labels.end());
  const int keep_label = labels.front();
  auto compress = [&](int l) {
    int shift = 0;
    for (std::size_t i = 1; i < labels.size(); ++i)
      if (labels[i] < l) ++shift;
    return l - shift;
  };

  // rebuild the outer graph with half-edges renumbered in order
  auto data = g.data();
  std::vector<int> hmap(g.num_half_edges(), -1);
  int nh = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (std::find(gone.begin(), gone.end(), h) == gone.end()) hmap[h] = nh++;
  graph::GraphData nd;
  nd.allow_bivalent = g.allow_bivalent();
  nd.pairing.resize(nh);
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (hmap[h] >= 0) nd.pairing[hmap[h]] = hmap[g.partner(h)];
  std::vector<int> vmap(g.num_vertices(), -1);
  LabelledGraph y;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (std::find(gone_vertices.begin(), gone_vertices.end(), v) != gone_vertices.end()) continue;
    vmap[v] = static_cast<int>(nd.vertices.size());
    if (v == u) {
      nd.vertices.push_back({hmap[up]});
      nd.boundary.emplace_back(hmap[up], Label{Side::in, keep_label});
      y.labels.push_back(operad::PortTree(1, {}));
      continue;
    }
    nd.vertices.emplace_back();
    for (int h : g.star(v)) nd.vertices.back().push_back(hmap[h]);
    y.labels.push_back(x.labels[v]);
  }
  for (auto [h, l] : data.boundary) {
    if (hmap[h] < 0) continue;
    if (l.side == Side::in) l.index = compress(l.index);
    nd.boundary.emplace_back(hmap[h], l);
  }
  for (auto [h, l] : data.tori) nd.tori.emplace_back(hmap[h], l);
  y.outer = graph::build_graph(nd);
  for (const auto& le : x.ordering)
    if (le.vertex != u) y.ordering.push_back({vmap[le.vertex], le.split});
  operad::validate(y);

  Absorbed r{std::move(y), {}};
  if (!acts(x, u)) return r;
  const int sign = parent[u] == t ? 1 : -1;
  // bring the letters of u next to each other, then multiply
  std::vector<int> pos;
  for (int l : labels) pos.push_back(l - 1);
  std::vector<int> order;
  const int n = word.empty() ? 0 : word.begin()->first.weight();
  for (int i = 0; i < n; ++i) {
    if (std::find(pos.begin() + 1, pos.end(), i) != pos.end()) continue;
    order.push_back(i);
    if (i == pos.front()) order.insert(order.end(), pos.begin() + 1, pos.end());
  }
  for (const auto& [w, c] : word) {
    std::vector<cinfty::Vector> slots;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order[k] != pos.front()) {
        if (std::find(pos.begin(), pos.end(), order[k]) == pos.end()) slots.push_back(cinfty::basis_vector(w.letters[order[k]]));
        continue;
      }
      cinfty::Vector acc = cinfty::basis_vector(w.letters[pos.front()]);
      for (std::size_t i = 1; i < pos.size(); ++i)
        acc = a.m(std::vector<cinfty::Vector>{acc, cinfty::basis_vector(w.letters[pos[i]])});
      slots.push_back(std::move(acc));
    }
    add_to(r.word, expand(slots, c * sign * koszul(a, w, order)));
  }
  return r;
}

ConfluenceReport check_confluence(const CInftyAlgebra& a, const LabelledGraph& x, const TensorWord& word) {
  ConfluenceReport r;
  const BonnetForm expected = bonnet_representative(a, x, word);
  WordChain start;
  add_to(start, word, 1);
  std::function<void(const LabelledGraph&, const WordChain&, std::string)> walk =
      [&](const LabelledGraph& y, const WordChain& w, std::string path) {
        if (!r.ok) return;
        auto next = absorbable_vertices(y);
        if (next.empty()) {
          ++r.orders;
          BonnetForm f = finish(y, w);
          if (!same_form(f, expected)) {
            r.ok = false;
            r.detail = "order" + path + " gives " + to_string(a, f) + ", expected " + to_string(a, expected);
          }
          return;
        }
        for (int u : next) {
          auto s = absorb_vertex(a, y, w, u);
          walk(s.element, s.word, path + " " + std::to_string(u));
        }
      };
  walk(x, start, "");
  return r;
}

}  // namespace bonnet::harrison
