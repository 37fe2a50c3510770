#include <doctest.h>

#include "bonnet/cinfty/builtins.hpp"
#include "bonnet/cinfty/io.hpp"
#include "bonnet/cinfty/validate.hpp"

#include <set>

using namespace bonnet;
using namespace bonnet::cinfty;

namespace {

const char* kQ = R"({"basis": [{"name": "1", "degree": 0}],
  "operations": {"2": [["1", "1", "1", 1]]}, "pairing": [["1", "1", "1"]]})";

const char* kS2 = R"({"name": "S2", "convention": "cohomological",
  "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2}],
  "operations": {"2": [["1","1","1","1"], ["1","x","x","1"], ["x","1","x","1"]]},
  "pairing": [["1","x","1"], ["x","1","1"]]})";

// 2x2 matrices, degree 0
CInftyAlgebra matrices() {
  CInftyAlgebra a;
  a.name = "M2";
  a.basis = {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) add_to(a.operations[{2 * i + j, 2 * j + k}], 2 * i + k, 1);
  check_structure(a);
  return a;
}

}  // namespace

TEST_CASE("loading") {
  auto q = load_algebra(kQ);
  CHECK(q.dim() == 1);
  CHECK(q.m(std::vector<int>{0, 0}) == basis_vector(0));
  CHECK(q.arity_cap == 2);

  auto s2 = load_algebra(kS2);
  CHECK(s2.degree(1) == -2);
  CHECK(load_algebra(save_algebra(s2)) == s2);
  CHECK(save_algebra(load_algebra(save_algebra(s2))) == save_algebra(s2));

  // m_2 raising degree
  CHECK_THROWS_AS(load_algebra(R"({"basis": [{"name": "1", "degree": 0}, {"name": "y", "degree": 1}],
      "operations": {"2": [["1", "1", "y", 1]]}})"),
                  AlgebraError);
  // singular pairing
  CHECK_THROWS_AS(load_algebra(R"({"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
      "pairing": [["1", "1", 1]]})"),
                  AlgebraError);
  CHECK_THROWS_AS(load_algebra("{not json"), AlgebraError);
  CHECK_THROWS_AS(load_algebra(R"({"basis": [{"name": "1", "degree": 0}], "operations": {"2": [["1", "z", "1", 1]]}})"),
                  AlgebraError);
  CHECK_THROWS_AS(load_algebra(R"({"basis": [{"name": "a", "degree": 1}, {"name": "b", "degree": 0}],
      "differential": [["a", "b", 1], ["b", "a", 1]]})"),
                  AlgebraError);
  CHECK_THROWS_AS(load_algebra(R"({"basis": [], "extra": 1})"), AlgebraError);
}

TEST_CASE("built-ins pass every validator to arity 4") {
  std::set<std::string> keys;
  for (const auto& b : builtin_list()) keys.insert(b.key);
  CHECK(keys == std::set<std::string>{"Q", "Qx2", "Qx3", "S2", "S1"});
  for (const auto& a : builtin_algebras()) {
    auto r = validate_all(a, 4);
    CHECK_MESSAGE(r.ok(), a.name);
    CHECK(r.arity_checked == 4);
    CHECK(load_algebra(save_algebra(a)) == a);
  }
  auto s1 = builtin_algebra("S1");
  CHECK(s1.m(std::vector<int>{1, 1}).empty());
  CHECK_THROWS_AS(builtin_algebra("nope"), std::invalid_argument);
}

TEST_CASE("documented mutations fail with witnesses") {
  auto muts = documented_mutations();
  CHECK(muts.size() == 10);
  for (const auto& m : muts) {
    auto r = validate_all(m.apply(), 4);
    REQUIRE_MESSAGE(!r.ok(), m.description);
    const Check* f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK(!f->witness.empty());
  }
  // the first one fails associativity at (1,1,x)
  auto r = check_ainfty(muts[0].apply(), 3);
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->witness == std::vector<std::string>{"1", "1", "x"});
}

TEST_CASE("m2(x,x) = 1 on Q[x]/(x^2) is still associative") {
  Mutation m{"Qx2", Mutation::Kind::operation, {"x", "x"}, "1", "1", "m2(x,x) = 1"};
  auto a = m.apply();
  CHECK(check_ainfty(a, 4).ok());
  CHECK(check_shuffle_vanishing(a, 4).ok());
}

TEST_CASE("commutativity and matrices") {
  auto m = matrices();
  CHECK(check_ainfty(m, 3).ok());
  auto r = check_shuffle_vanishing(m, 2);
  REQUIRE(!r.ok());
  CHECK(r.first_failure()->arity == 2);
}

TEST_CASE("cyclic pairing") {
  auto a = builtin_algebra("Qx3");
  CHECK(check_cyclic(a, 4).ok());
  a.pairing.clear();
  for (int i = 0; i < 3; ++i) a.pairing[{i, i}] = 1;
  auto r = check_cyclic(a, 2);
  REQUIRE(!r.ok());
  CHECK(r.first_failure()->witness.size() == 3);
  CHECK(check_cyclic(builtin_algebra("Q"), 4).ok());
}

TEST_CASE("only m3, no differential") {
  CInftyAlgebra a;
  a.name = "m3";
  a.basis = {{"u", 0}, {"v", 1}};
  a.arity_cap = 3;
  add_to(a.operations[{0, 0, 0}], 1, 1);
  check_structure(a);
  CHECK(check_ainfty(a, 3).ok());
}

TEST_CASE("dg algebra Leibniz rule") {
  // 1, a (degree 1), b (degree 0), δa = b, all other products zero
  CInftyAlgebra a;
  a.name = "dg";
  a.basis = {{"1", 0}, {"a", 1}, {"b", 0}};
  for (int i = 0; i < 3; ++i) {
    add_to(a.operations[{0, i}], i, 1);
    if (i) add_to(a.operations[{i, 0}], i, 1);
  }
  add_to(a.differential[1], 2, 1);
  check_structure(a);
  CHECK(check_ainfty(a, 3).ok());
  CHECK(check_shuffle_vanishing(a, 3).ok());
  // b*b = b breaks the Leibniz rule at (a, b)
  auto bad = a;
  add_to(bad.operations[{2, 2}], 2, 1);
  CHECK(!check_ainfty(bad, 2).ok());
}

TEST_CASE("shuffles") {
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(shuffles(1, 3).size() == 4);
  // swapping two odd letters: sign(σ) = -1, Koszul = -1
  CHECK(shuffle_sign({1, 0}, {1, 1}) == 1);
  CHECK(shuffle_sign({1, 0}, {0, 1}) == -1);
}
