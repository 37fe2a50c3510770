#include <doctest.h>

#include "bonnet/graph/canonical.hpp"
#include "bonnet/graph/forest.hpp"
#include "bonnet/graph/literal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace bonnet::graph;

namespace {

const char* kCorolla = "graph h=6 e=[0:3 1:4 2:5] v=[0.1.2 3 4 5] in=[1@3 2@4] out=[1@5] tori=[] flags=[]";
const char* kTheta = "graph h=6 e=[0:3 1:4 2:5] v=[0.1.2 3.4.5] in=[] out=[] tori=[] flags=[]";
const char* kLoopTail = "graph h=4 e=[0:1 2:3] v=[0.1.2 3] in=[] out=[1@3] tori=[] flags=[]";
const char* kTree4 =
    "graph h=10 e=[0:6 1:7 2:3 4:8 5:9] v=[0.1.2 3.4.5 6 7 8 9] in=[1@6 2@7 3@8] out=[1@9] tori=[] flags=[]";
const char* kBalloons =
    "graph h=10 e=[0:3 1:4 2:7 5:6 8:9] v=[0.1.2 3 4.5.6 7.8.9] in=[] out=[1@3] tori=[out1@5 out2@8] flags=[]";
// genus 2 with two leaves and a double edge
const char* kDouble =
    "graph h=12 e=[0:9 1:3 2:4 5:6 7:8 10:11] v=[0.1.2 3.4.5.10 6.7.8 9 11] in=[1@9] out=[1@11] tori=[] flags=[]";
// K4 without boundary
const char* kK4 =
    "graph h=12 e=[0:3 1:6 2:9 4:7 5:10 8:11] v=[0.1.2 3.4.5 6.7.8 9.10.11] in=[] out=[] tori=[] flags=[]";
const char* kBonnet0 = "graph h=2 e=[0:1] v=[0.1] in=[] out=[] tori=[out1@0] flags=[bivalent]";

std::vector<const char*> samples() { return {kCorolla, kTheta, kLoopTail, kTree4, kBalloons, kDouble, kK4}; }

Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> hp(g.num_half_edges()), vp(g.num_vertices());
  std::iota(hp.begin(), hp.end(), 0);
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(hp.begin(), hp.end(), rng);
  std::shuffle(vp.begin(), vp.end(), rng);
  return relabel(g, hp, vp);
}

// All half-edge bijections respecting pairing, vertex blocks, labels and colors.
std::size_t brute_force_automorphisms(const Graph& g) {
  int n = g.num_half_edges();
  std::vector<int> img(n, -1), used(n, 0);
  std::vector<int> vimg(g.num_vertices(), -1);
  std::size_t count = 0;
  std::function<void(int)> go = [&](int h) {
    if (h == n) {
      ++count;
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      int v = g.vertex_of(h), w = g.vertex_of(t);
      if (vimg[v] != -1 && vimg[v] != w) continue;
      if (vimg[v] == -1 && std::find(vimg.begin(), vimg.end(), w) != vimg.end()) continue;
      if (g.valence(v) != g.valence(w) || g.leaf_label(v) != g.leaf_label(w)) continue;
      if (g.torus_label(g.edge_of(h)) != g.torus_label(g.edge_of(t))) continue;
      int p = g.partner(h);
      if (p < h && img[p] != g.partner(t)) continue;
      int saved = vimg[v];
      img[h] = t;
      used[t] = 1;
      vimg[v] = w;
      go(h + 1);
      vimg[v] = saved;
      used[t] = 0;
      img[h] = -1;
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("build_graph validation") {
  CHECK(parse_graph(kCorolla).num_vertices() == 4);
  GraphData fixed;
  fixed.pairing = {0, 2, 1};
  fixed.vertices = {{0, 1, 2}};
  CHECK_THROWS(build_graph(fixed));
  GraphData biv;
  biv.pairing = {1, 0};
  biv.vertices = {{0, 1}};
  CHECK_THROWS(build_graph(biv));
  biv.allow_bivalent = true;
  CHECK_NOTHROW(build_graph(biv));
  // label on an internal half-edge
  CHECK_THROWS(parse_graph("graph h=6 e=[0:3 1:4 2:5] v=[0.1.2 3 4 5] in=[1@0 2@4] out=[1@5] tori=[] flags=[]"));
  // torus mark on a non-loop
  CHECK_THROWS(parse_graph("graph h=6 e=[0:3 1:4 2:5] v=[0.1.2 3 4 5] in=[1@3 2@4] out=[1@5] tori=[in1@0] flags=[]"));
  // unlabelled leaf
  CHECK_THROWS(parse_graph("graph h=6 e=[0:3 1:4 2:5] v=[0.1.2 3 4 5] in=[1@3] out=[1@5] tori=[] flags=[]"));
  CHECK(parse_graph(kBonnet0).valence(0) == 2);
}

TEST_CASE("genus") {
  CHECK(genus(parse_graph(kCorolla)) == 0);
  CHECK(genus(parse_graph(kLoopTail)) == 1);
  CHECK(genus(parse_graph(kTheta)) == 2);
  CHECK(genus(parse_graph(kK4)) == 3);
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    CHECK(genus(g) == g.num_edges() - g.num_vertices() + num_components(g));
  }
}

TEST_CASE("literal round trip") {
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    CHECK(to_literal(g) == s);
    CHECK(parse_graph(to_literal(g)) == g);
  }
  CHECK(to_literal(parse_graph(kBonnet0)) == kBonnet0);
  CHECK_THROWS(parse_graph("graph h=2 e=[0:1] v=[0.1] in=[] out=[] tori=[] flags=[] junk"));
}

TEST_CASE("collapse_edge") {
  Graph t = parse_graph(kTree4);
  int internal = t.edge_of(2);
  Graph c = collapse_edge(t, internal);
  CHECK(c.num_internal_vertices() == 1);
  CHECK(c.valence(0) == 4);
  CHECK(canonicalize(c).code ==
        canonicalize(parse_graph("graph h=8 e=[0:4 1:5 2:6 3:7] v=[0.1.2.3 4 5 6 7] in=[1@4 2@5 3@6] out=[1@7] "
                                 "tori=[] flags=[]"))
            .code);
  Graph th = collapse_edge(parse_graph(kTheta), 0);
  CHECK(th.num_vertices() == 1);
  CHECK(genus(th) == 2);
  CHECK(th.is_loop(0));
  CHECK(th.is_loop(1));
  Graph b = parse_graph(kBalloons);
  CHECK_THROWS(collapse_edge(b, b.edge_of(5)));  // balloon loop
  CHECK_THROWS(collapse_edge(b, b.edge_of(0)));  // boundary edge
}

TEST_CASE("collapse preserves genus, labels, connectivity") {
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.is_loop(e) || g.is_boundary(e)) continue;
      Graph c = collapse_edge(g, e);
      CHECK(genus(c) == genus(g));
      CHECK(num_components(c) == num_components(g));
      CHECK(c.count_boundary(Side::in) == g.count_boundary(Side::in));
      CHECK(c.count_boundary(Side::out) == g.count_boundary(Side::out));
      CHECK(c.count_tori(Side::out) == g.count_tori(Side::out));
    }
  }
}

TEST_CASE("admissible forests") {
  auto lt = admissible_forests(parse_graph(kLoopTail));
  REQUIRE(lt.size() == 1);
  CHECK(lt[0].edges.empty());
  Graph t = parse_graph(kTree4);
  auto tf = admissible_forests(t);
  REQUIRE(tf.size() == 2);
  CHECK(tf[1].edges == std::vector<int>{t.edge_of(2)});
  Graph b = parse_graph(kBalloons);
  auto bf = admissible_forests(b);
  REQUIRE(bf.size() == 3);
  CHECK(bf[1].edges == std::vector<int>{b.edge_of(1)});
  CHECK(bf[2].edges == std::vector<int>{b.edge_of(2)});
  CHECK_FALSE(is_admissible(b, Forest{{b.edge_of(1), b.edge_of(2)}}));
}

TEST_CASE("admissible forests are closed under subsets and collapse order is irrelevant") {
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    auto fs = admissible_forests(g);
    for (const auto& f : fs) {
      for (std::size_t i = 0; i < f.edges.size(); ++i) {
        Forest sub = f;
        sub.edges.erase(sub.edges.begin() + i);
        CHECK(std::find(fs.begin(), fs.end(), sub) != fs.end());
      }
      if (f.edges.size() == 2) {
        auto r1 = collapse_edge_mapped(g, f.edges[0]);
        Graph a = collapse_edge(r1.graph, r1.edge_map[f.edges[1]]);
        auto r2 = collapse_edge_mapped(g, f.edges[1]);
        Graph b = collapse_edge(r2.graph, r2.edge_map[f.edges[0]]);
        CHECK(canonicalize(a).code == canonicalize(b).code);
        CHECK(canonicalize(collapse_forest(g, f)).code == canonicalize(a).code);
      }
    }
    CHECK(canonicalize(collapse_forest(g, Forest{})).code == canonicalize(g).code);
  }
  Graph t = parse_graph(kTree4);
  CHECK(collapse_forest(t, admissible_forests(t).back()).num_internal_vertices() == 1);
}

TEST_CASE("canonical form is invariant, idempotent and witnessed") {
  std::mt19937 rng(7);
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    auto base = canonicalize(g);
    CHECK(canonicalize(base.graph).code == base.code);
    CHECK(canonicalize(base.graph).graph == base.graph);
    for (int i = 0; i < 1000; ++i) {
      Graph h = random_relabel(g, rng);
      auto cf = canonicalize(h);
      REQUIRE(cf.code == base.code);
      REQUIRE(cf.graph == base.graph);
      // the relabelling carries h onto the canonical graph
      const auto& m = cf.relabelling();
      for (int x = 0; x < h.num_half_edges(); ++x) {
        REQUIRE(cf.graph.partner(m[x]) == m[h.partner(x)]);
        REQUIRE(cf.graph.vertex_of(m[x]) == cf.graph.vertex_of(m[h.star(h.vertex_of(x))[0]]));
      }
    }
  }
}

TEST_CASE("boundary labels are preserved data") {
  Graph a = parse_graph(kTree4);
  Graph b = parse_graph(
      "graph h=10 e=[0:6 1:7 2:3 4:8 5:9] v=[0.1.2 3.4.5 6 7 8 9] in=[2@6 3@7 1@8] out=[1@9] tori=[] flags=[]");
  CHECK(canonicalize(a).code != canonicalize(b).code);
  Graph c = parse_graph(
      "graph h=10 e=[0:6 1:7 2:3 4:8 5:9] v=[0.1.2 3.4.5 6 7 8 9] in=[2@6 1@7 3@8] out=[1@9] tori=[] flags=[]");
  CHECK(canonicalize(a).code == canonicalize(c).code);
}

TEST_CASE("edge colors distinguish forests") {
  Graph th = parse_graph(kTheta);
  auto c0 = canonicalize(th, {1, 0, 0});
  auto c1 = canonicalize(th, {0, 0, 1});
  auto c2 = canonicalize(th, {1, 1, 0});
  CHECK(c0.code == c1.code);
  CHECK(c0.code != c2.code);
  CHECK(c0.half_edge_maps.size() == 2);  // vertex swap survives
}

TEST_CASE("automorphism groups") {
  auto order = [](const char* s) {
    Graph g = parse_graph(s);
    return group_order(automorphism_generators(g), g.num_half_edges());
  };
  CHECK(order(kTree4) == 1);
  CHECK(order(kCorolla) == 1);
  CHECK(order(kTheta) == 12);
  CHECK(order(kLoopTail) == 2);
  CHECK(order(kK4) == 24);
  for (auto s : samples()) {
    Graph g = parse_graph(s);
    if (g.num_edges() > 8) continue;
    CHECK(order(s) == brute_force_automorphisms(g));
    for (const auto& p : automorphism_generators(g))
      for (int h = 0; h < g.num_half_edges(); ++h) CHECK(p[g.partner(h)] == g.partner(p[h]));
  }
}

TEST_CASE("forest_sign_after") {
  OrientationSign o{{4, 7}, 1};
  auto a = forest_sign_after(FaceMove::remove_edge, o, 4);
  CHECK(a.sign == 1);
  CHECK(a.ordering == std::vector<int>{7});
  auto b = forest_sign_after(FaceMove::collapse_edge, o, 7);
  CHECK(b.sign == -1);
  CHECK_THROWS(forest_sign_after(FaceMove::remove_edge, o, 5));
  // removing two edges in either order: sign(e then f) = -sign(f then e)
  std::vector<int> base{0, 1, 2};
  do {
    OrientationSign s{base, 1};
    for (int e = 0; e < 3; ++e)
      for (int f = 0; f < 3; ++f) {
        if (e == f) continue;
        auto ef = forest_sign_after(FaceMove::remove_edge, forest_sign_after(FaceMove::remove_edge, s, e), f);
        auto fe = forest_sign_after(FaceMove::remove_edge, forest_sign_after(FaceMove::remove_edge, s, f), e);
        CHECK(ef.ordering == fe.ordering);
        CHECK(ef.sign == -fe.sign);
      }
  } while (std::next_permutation(base.begin(), base.end()));
  CHECK(sort_sign({1, 0, 2}) == -1);
  CHECK(sort_sign({2, 0, 1}) == 1);
}
