#include <doctest.h>

#include "bonnet/cinfty/builtins.hpp"
#include "bonnet/harrison/bonnet_form.hpp"
#include "bonnet/harrison/oracle.hpp"
#include "bonnet/harrison/torus.hpp"
#include "bonnet/moduli/bonnet.hpp"
#include "bonnet/moduli/generalized_cobar.hpp"

using namespace bonnet;
using namespace bonnet::harrison;
using cinfty::builtin_algebra;
using cinfty::CInftyAlgebra;

namespace {

TensorWord word(std::vector<int> l) { return TensorWord{std::move(l)}; }

// exterior algebra on two odd generators: 1, a, b, ab
CInftyAlgebra exterior() {
  CInftyAlgebra e;
  e.name = "L2";
  e.basis = {{"1", 0}, {"a", 1}, {"b", 1}, {"ab", 2}};
  for (int i = 0; i < 4; ++i) {
    cinfty::add_to(e.operations[{0, i}], i, 1);
    if (i) cinfty::add_to(e.operations[{i, 0}], i, 1);
  }
  cinfty::add_to(e.operations[{1, 2}], 3, 1);
  cinfty::add_to(e.operations[{2, 1}], 3, -1);
  cinfty::check_structure(e);
  return e;
}

// 1, a (degree 1), b (degree 0), δa = b
CInftyAlgebra dg() {
  CInftyAlgebra a;
  a.name = "dg";
  a.basis = {{"1", 0}, {"a", 1}, {"b", 0}};
  for (int i = 0; i < 3; ++i) {
    cinfty::add_to(a.operations[{0, i}], i, 1);
    if (i) cinfty::add_to(a.operations[{i, 0}], i, 1);
  }
  cinfty::add_to(a.differential[1], 2, 1);
  cinfty::check_structure(a);
  return a;
}

CInftyAlgebra matrices() {
  CInftyAlgebra a;
  a.name = "M2";
  a.basis = {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) cinfty::add_to(a.operations[{2 * i + j, 2 * j + k}], 2 * i + k, 1);
  cinfty::check_structure(a);
  return a;
}

bool oracle_agrees(const CInftyAlgebra& a, int w) {
  auto main = harrison_betti(a, w);
  auto orc = harrison_oracle(a, w);
  if (main.size() != orc.size()) return false;
  for (std::size_t i = 0; i < main.size(); ++i)
    if (main[i].complete && (main[i].degree != orc[i].degree || main[i].betti != orc[i].betti || main[i].dim != orc[i].dim))
      return false;
  return true;
}

}  // namespace

TEST_CASE("shuffle products") {
  auto x2 = builtin_algebra("Qx2");
  WordChain ab{{word({0, 1}), 1}, {word({1, 0}), -1}};
  CHECK(shuffle_product(x2, word({0}), word({1})) == ab);

  auto q = builtin_algebra("Q");
  CHECK(shuffle_product(q, word({0}), word({0})).empty());
  CHECK(shuffle_product(q, word({0}), word({0, 0})) == WordChain{{word({0, 0, 0}), 1}});

  // odd letters commute in the shuffle sign: sign(σ) = -1 and Koszul = -1
  auto e = exterior();
  CHECK(shuffle_product(e, word({1}), word({2})) == WordChain{{word({1, 2}), 1}, {word({2, 1}), 1}});
  CHECK(shuffle_product(e, word({1}), word({1})) == WordChain{{word({1, 1}), 2}});
}

TEST_CASE("shuffle quotients") {
  auto q = builtin_algebra("Q");
  CHECK(shuffle_quotient(q, 2).shuffle_dim == 0);
  CHECK(shuffle_quotient(q, 3).shuffle_dim == 1);

  const std::map<std::string, std::vector<std::size_t>> expected{
      {"Q", {1, 1, 0, 0}}, {"Qx2", {2, 3, 2, 3}}, {"Qx3", {3, 6, 8, 18}}, {"S2", {2, 3, 2, 3}}, {"S1", {2, 2, 2, 4}}};
  for (const auto& [key, dims] : expected) {
    auto a = builtin_algebra(key);
    for (int n = 1; n <= 4; ++n) {
      auto b = shuffle_quotient(a, n);
      CHECK_MESSAGE(b.section.size() == dims[n - 1], key << " weight " << n);
      CHECK(b.section.size() + b.shuffle_dim == b.words);
      // projection is the identity on the section
      for (const auto& w : b.section) CHECK(b.project(WordChain{{w, 1}}) == WordChain{{w, 1}});
      // and kills shuffle products
      for (int p = 1; p < n && n <= 3; ++p) {
        TensorWord u{std::vector<int>(p, a.dim() - 1)}, v{std::vector<int>(n - p, 0)};
        CHECK(b.project(shuffle_product(a, u, v)).empty());
      }
    }
  }
}

TEST_CASE("Torus(Q)") {
  auto t = torus_complex(builtin_algebra("Q"), 6);
  REQUIRE(t.degrees.size() == 2);
  CHECK(t.degrees[0].basis == std::vector<TensorWord>{word({0})});
  CHECK(t.degrees[1].basis == std::vector<TensorWord>{word({0, 0})});
  CHECK(torus_differential(builtin_algebra("Q"), word({0, 0})) == WordChain{{word({0}), 1}});
  for (const auto& e : harrison_betti(t)) {
    CHECK(e.complete);
    CHECK(e.betti == 0);
  }
  CHECK_THROWS_AS(torus_complex(builtin_algebra("Q"), 0), std::invalid_argument);
}

TEST_CASE("weight one sees only the internal differential") {
  auto a = dg();
  CHECK(torus_differential(a, word({1})) == WordChain{{word({2}), -1}});
  CHECK(torus_differential(a, word({0})).empty());
}

TEST_CASE("d squares to zero and preserves the shuffle ideal") {
  auto algebras = cinfty::builtin_algebras();
  algebras.push_back(exterior());
  algebras.push_back(dg());
  for (const auto& a : algebras) {
    const int w = a.dim() > 3 ? 4 : 5;
    auto t = torus_complex(a, w);
    CHECK_MESSAGE(linalg::verify_dd_zero(t.complex).ok, a.name);
    auto r = check_ideal_preservation(a, w);
    CHECK_MESSAGE(r.ok, a.name << " " << r.witness);
    CHECK(r.generators > 0);
  }
  // a noncommutative product does not preserve the shuffle ideal
  auto r = check_ideal_preservation(matrices(), 3);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
}

TEST_CASE("oracle agrees with the torus complex") {
  for (const auto& a : cinfty::builtin_algebras()) CHECK_MESSAGE(oracle_agrees(a, a.dim() > 2 ? 4 : 5), a.name);
  CHECK(oracle_agrees(exterior(), 3));
  CHECK(oracle_agrees(dg(), 4));
  for (const auto& e : harrison_oracle(builtin_algebra("Q"), 6)) CHECK(e.betti == 0);
  // a different random complement gives the same numbers
  auto a = builtin_algebra("S1");
  auto x = harrison_oracle(a, 5, 1), y = harrison_oracle(a, 5, 99);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].betti == y[i].betti);
}

TEST_CASE("oracle refuses higher operations") {
  CInftyAlgebra a;
  a.name = "m3";
  a.basis = {{"u", 0}, {"v", 1}};
  a.arity_cap = 3;
  cinfty::add_to(a.operations[{0, 0, 0}], 1, 1);
  CHECK_THROWS_AS(harrison_oracle(a, 3), std::invalid_argument);
  CHECK_THROWS_AS(harrison_oracle(builtin_algebra("Q"), 0), std::invalid_argument);
}

TEST_CASE("complete degrees are stable in W") {
  for (const auto& a : cinfty::builtin_algebras()) {
    const int top = a.dim() > 2 ? 5 : 6;
    auto hi = harrison_betti(a, top);
    for (int w = 1; w < top; ++w)
      for (const auto& e : harrison_betti(a, w)) {
        if (!e.complete) continue;
        auto it = std::find_if(hi.begin(), hi.end(), [&](const HarrisonEntry& h) { return h.degree == e.degree; });
        REQUIRE(it != hi.end());
        CHECK_MESSAGE(it->betti == e.betti, a.name << " W=" << w << " degree " << e.degree);
        CHECK(it->dim == e.dim);
      }
  }
  // negative degrees are never complete
  CInftyAlgebra neg = builtin_algebra("S2");
  neg.basis[1].degree = -2;
  CHECK(!degree_complete(neg, 6, 1));
}

TEST_CASE("bonnet normal form") {
  auto s1 = builtin_algebra("S1");
  const auto c2 = moduli::generalized_cobar(moduli::bonnet_profile(2));
  const auto c1 = moduli::generalized_cobar(moduli::bonnet_profile(1));

  // B(2) itself is left alone
  for (const auto& layer : c2.basis)
    for (const auto& x : layer) {
      if (x.outer.num_internal_vertices() != 1) continue;
      auto f = bonnet_representative(s1, x, word({1, 0}));
      auto loc = operad::locate(x);
      CHECK(f.degree() == 2);
      CHECK(f.code == loc.code);
      CHECK(f.word == WordChain{{word({1, 0}), loc.sign}});
    }

  // a pendant corolla on the two leaves multiplies them into B(1)
  const operad::LabelledGraph* pendant = nullptr;
  for (const auto& x : c2.basis[0])
    if (x.outer.num_internal_vertices() == 2) pendant = &x;
  REQUIRE(pendant != nullptr);
  auto e = exterior();
  auto f = bonnet_representative(e, *pendant, word({1, 2}));
  CHECK(f.degree() == 1);
  CHECK(f.code == operad::locate(c1.basis[0][0]).code);
  const int s = f.word.begin()->second.get_num().get_si();
  CHECK(f.word == WordChain{{word({3}), s}});
  // swapping two odd letters flips the sign
  CHECK(bonnet_representative(e, *pendant, word({2, 1})).word == WordChain{{word({3}), -s}});
  // one rewriting step agrees
  auto step = absorb_vertex(e, *pendant, WordChain{{word({1, 2}), 1}}, absorbable_vertices(*pendant).front());
  CHECK(step.element.outer.num_internal_vertices() == 1);
  CHECK(operad::locate(step.element).code == f.code);
  CHECK(step.word == WordChain{{word({3}), s * operad::locate(step.element).sign}});
  // squares of odd letters vanish
  CHECK(bonnet_representative(e, *pendant, word({1, 1})).zero());

  CHECK_THROWS_AS(bonnet_representative(e, *pendant, word({1})), std::invalid_argument);
  CInftyAlgebra m3 = s1;
  m3.arity_cap = 3;
  cinfty::add_to(m3.operations[{1, 1, 1}], 1, 1);
  CHECK_THROWS_AS(bonnet_representative(m3, *pendant, word({1, 1})), std::invalid_argument);
}

TEST_CASE("bonnet normal form is independent of the rewriting order") {
  auto e = exterior();
  std::size_t multi = 0;
  for (int k = 1; k <= 4; ++k) {
    const auto c = moduli::generalized_cobar(moduli::bonnet_profile(k));
    for (const auto& layer : c.basis)
      for (const auto& x : layer) {
        TensorWord w{std::vector<int>(k, 0)};
        for (int i = 0; i < k; ++i) w.letters[i] = 1 + i % 2;  // a b a b
        auto r = check_confluence(e, x, w);
        CHECK_MESSAGE(r.ok, r.detail);
        if (r.orders > 1) ++multi;
      }
  }
  CHECK(multi > 0);

  // with a noncommutative product the two routes disagree somewhere
  auto m = matrices();
  bool broken = false;
  const auto c3 = moduli::generalized_cobar(moduli::bonnet_profile(3));
  for (const auto& layer : c3.basis)
    for (const auto& x : layer) broken = broken || !check_confluence(m, x, word({1, 2, 1})).ok;
  CHECK(broken);
}
