#include <doctest.h>

#include "bonnet/graph/canonical.hpp"
#include "bonnet/operad/bar_cobar.hpp"
#include "bonnet/operad/tree_literal.hpp"

#include <set>

using namespace bonnet;
using namespace bonnet::operad;

namespace {

std::size_t total_betti(const linalg::GradedChainComplex& c) {
  std::size_t t = 0;
  for (const auto& b : linalg::betti(c)) t += b.betti;
  return t;
}

// Sparse vector over (degree, index) of a signed sum of elements.
std::map<std::pair<int, int>, int> vec(const LabelledComplex& c, const std::vector<LabelledTerm>& terms) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& t : terms)
    for (const auto& co : coordinates(c, t.element, t.coefficient)) out[{co.degree, co.index}] += co.coefficient;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("tree enumeration counts and uniqueness") {
  // total number of trees with n labelled leaves (internal valence >= 3)
  std::vector<std::size_t> expected{1, 1, 4, 26, 236, 2752};
  for (int m = 2; m <= 7; ++m) {
    auto trees = enumerate_trees(m);
    CHECK(trees.size() == expected[m - 2]);
    if (m >= 3 && m <= 6) {
      std::set<std::vector<int>> codes;
      for (const auto& t : trees) codes.insert(graph::canonicalize(tree_graph(t)).code);
      CHECK(codes.size() == trees.size());
    }
  }
}

TEST_CASE("tree literal round trip") {
  CHECK(to_literal(PortTree::corolla(4)) == "(1,2,3)");
  CHECK(parse_tree("((1,2),3)").splits() == std::vector<Mask>{0b0110});
  CHECK(to_literal(parse_tree("(3,(2,1))")) == "((1,2),3)");
  for (int m = 3; m <= 6; ++m)
    for (const auto& t : enumerate_trees(m)) CHECK(parse_tree(to_literal(t)) == t);
  CHECK_THROWS(parse_tree("((1,2))"));
  CHECK_THROWS(parse_tree("(1,3)"));
  CHECK_THROWS(parse_tree("(1,2"));
}

TEST_CASE("bar complex small arities") {
  auto b2 = bar_complex(2);
  CHECK(b2.complex.dim(0) == 1);
  CHECK(linalg::betti(b2.complex)[0].betti == 1);
  auto b3 = bar_complex(3);
  CHECK(b3.complex.dim(0) == 1);
  CHECK(b3.complex.dim(1) == 3);
  auto be = linalg::betti(b3.complex);
  CHECK(be[0].betti == 0);
  CHECK(be[1].betti == 2);
  CHECK(total_betti(bar_complex(4).complex) == 6);
  CHECK_THROWS(bar_complex(1));
}

TEST_CASE("bar homology is (n-1)! in the top degree") {
  std::size_t fact = 1;
  for (int n = 2; n <= 5; ++n) {
    fact *= (n - 1);
    auto b = bar_complex(n);
    CHECK(linalg::verify_dd_zero(b.complex).ok);
    auto be = linalg::betti(b.complex);
    std::size_t nonzero = 0, total = 0;
    for (const auto& e : be) {
      total += e.betti;
      if (e.betti) {
        ++nonzero;
        CHECK(e.degree == n - 2);
      }
    }
    CHECK(total == fact);
    CHECK(nonzero == 1);
  }
  CHECK(linalg::verify_dd_zero(bar_complex(6).complex).ok);
}

TEST_CASE("cobar-bar resolves Comm") {
  auto c2 = cobar_bar_complex(2);
  CHECK(c2.size() == 1);
  auto c3 = cobar_bar_complex(3);
  CHECK(c3.complex.dim(0) == 4);
  CHECK(c3.complex.dim(1) == 3);
  auto b3 = linalg::betti(c3.complex);
  CHECK(b3[0].betti == 1);
  CHECK(b3[1].betti == 0);
  for (int n = 2; n <= 5; ++n) {
    auto c = cobar_bar_complex(n);
    REQUIRE(linalg::verify_dd_zero(c.complex).ok);
    auto be = linalg::betti(c.complex);
    for (const auto& e : be) CHECK(e.betti == (e.degree == 0 ? 1u : 0u));
    CHECK(linalg::euler_from_betti(be) == linalg::euler_from_dims(be));
  }
}

TEST_CASE("canonical representatives are +1 and expand/contract round trip") {
  auto c = cobar_bar_complex(4);
  for (const auto& level : c.basis)
    for (const auto& x : level) {
      validate(x);
      auto l = locate(x);
      CHECK(l.sign == 1);
      CHECK_FALSE(l.vanishes);
      auto e = expand(x);
      auto y = contract_labels(e.graph, e.forest);
      CHECK(locate(y).code == l.code);
      CHECK(locate(y).sign == 1);
    }
}

TEST_CASE("graft unit and shapes") {
  auto id = identity_element();
  auto c2 = corolla_element(2);
  CHECK(locate(graft(c2, {id, id})).code == locate(c2).code);
  CHECK(locate(graft_at(id, 1, c2)).code == locate(c2).code);
  auto two_level = graft(c2, {c2, c2});
  CHECK(arity(two_level) == 4);
  CHECK(two_level.outer.num_internal_vertices() == 3);
  CHECK_THROWS(graft(c2, {c2}));
  // ((1,2),(3,4)) shape: the root vertex has two internal neighbours
  auto c = cobar_bar_complex(4);
  CHECK_NOTHROW(coordinates(c, two_level));
}

TEST_CASE("graft is associative with signs") {
  // elements with up to three internal vertices, from arities 2 and 3
  auto c2 = cobar_bar_complex(2), c3 = cobar_bar_complex(3);
  std::vector<LabelledGraph> pool;
  for (const auto* c : {&c2, &c3})
    for (const auto& level : c->basis)
      for (const auto& x : level) pool.push_back(x);
  auto c5 = cobar_bar_complex(5);
  int checked = 0;
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& d : pool) {
        if (arity(a) + arity(b) + arity(d) - 2 > 5) continue;
        // (a ∘_1 b) ∘_1 d = a ∘_1 (b ∘_1 d)
        auto left = graft_at(graft_at(a, 1, b), 1, d);
        auto right = graft_at(a, 1, graft_at(b, 1, d));
        REQUIRE(locate(left).code == locate(right).code);
        CHECK(locate(left).sign == locate(right).sign);
        // (a ∘_1 b) ∘_{k} d with k past b's leaves = (a ∘_2 d) ∘_1 b
        if (arity(a) >= 2) {
          int k = arity(b) + 1;
          auto l2 = graft_at(graft_at(a, 1, b), k, d);
          auto r2 = graft_at(graft_at(a, 2, d), 1, b);
          REQUIRE(locate(l2).code == locate(r2).code);
          int parity = (b.degree() * d.degree()) % 2 ? -1 : 1;
          CHECK(locate(l2).sign == parity * locate(r2).sign);
        }
        ++checked;
      }
  CHECK(checked > 0);
  (void)c5;
}

TEST_CASE("differential is a derivation for graft") {
  auto c2 = cobar_bar_complex(2), c3 = cobar_bar_complex(3), c4 = cobar_bar_complex(4);
  auto c5 = cobar_bar_complex(5);
  std::vector<const LabelledComplex*> by_arity{nullptr, nullptr, &c2, &c3, &c4, &c5};
  std::vector<LabelledGraph> pool;
  for (const auto* c : {&c2, &c3, &c4})
    for (const auto& level : c->basis)
      for (const auto& x : level) pool.push_back(x);
  int checked = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      int n = arity(a) + arity(b) - 1;
      if (n > 5) continue;
      for (int i = 1; i <= arity(a); ++i) {
        auto ab = graft_at(a, i, b);
        std::vector<LabelledTerm> rhs;
        for (const auto& t : differential(a)) rhs.push_back({t.coefficient, graft_at(t.element, i, b)});
        int s = a.degree() % 2 ? -1 : 1;
        for (const auto& t : differential(b)) rhs.push_back({s * t.coefficient, graft_at(a, i, t.element)});
        REQUIRE(vec(*by_arity[n], differential(ab)) == vec(*by_arity[n], rhs));
        ++checked;
      }
    }
  CHECK(checked > 100);
}
