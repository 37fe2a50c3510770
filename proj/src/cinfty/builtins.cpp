#include "bonnet/cinfty/builtins.hpp"

#include <stdexcept>

namespace bonnet::cinfty {

namespace {

// Unital algebra with basis 1 = e_0, ..., products given for non-unit pairs.
CInftyAlgebra unital(std::string key, std::vector<Generator> basis,
                     const std::vector<std::tuple<int, int, int>>& products,
                     const std::vector<std::pair<int, int>>& pairing) {
  CInftyAlgebra a;
  a.name = std::move(key);
  a.basis = std::move(basis);
  a.arity_cap = 4;
  for (int i = 0; i < a.dim(); ++i) {
    add_to(a.operations[{0, i}], i, 1);
    if (i) add_to(a.operations[{i, 0}], i, 1);
  }
  for (auto [x, y, z] : products) add_to(a.operations[{x, y}], z, 1);
  for (auto [x, y] : pairing) a.pairing[{x, y}] = 1;
  check_structure(a);
  return a;
}

}  // namespace

std::vector<BuiltinInfo> builtin_list() {
  return {{"Q", "the ground field, <1,1> = 1"},
          {"Qx2", "Q[x]/(x^2), x in degree 0, <x^i,x^j> = 1 iff i+j = 1"},
          {"Qx3", "Q[x]/(x^3), x in degree 0, <x^i,x^j> = 1 iff i+j = 2"},
          {"S2", "H*(S^2;Q), x in degree 2, x^2 = 0, <1,x> = 1"},
          {"S1", "H*(S^1;Q), a in degree 1, a^2 = 0, <1,a> = 1"}};
}

CInftyAlgebra builtin_algebra(const std::string& key) {
  if (key == "Q") return unital(key, {{"1", 0}}, {}, {{0, 0}});
  if (key == "Qx2") return unital(key, {{"1", 0}, {"x", 0}}, {}, {{0, 1}, {1, 0}});
  if (key == "Qx3")
    return unital(key, {{"1", 0}, {"x", 0}, {"x2", 0}}, {{1, 1, 2}}, {{0, 2}, {1, 1}, {2, 0}});
  if (key == "S2") return unital(key, {{"1", 0}, {"x", 2}}, {}, {{0, 1}, {1, 0}});
  if (key == "S1") return unital(key, {{"1", 0}, {"a", 1}}, {}, {{0, 1}, {1, 0}});
  throw std::invalid_argument("unknown built-in algebra: " + key);
}

std::vector<CInftyAlgebra> builtin_algebras() {
  std::vector<CInftyAlgebra> out;
  for (const auto& b : builtin_list()) out.push_back(builtin_algebra(b.key));
  return out;
}

CInftyAlgebra Mutation::apply() const {
  CInftyAlgebra a = builtin_algebra(algebra);
  Rational v = linalg::parse_rational(value);
  if (kind == Kind::pairing) {
    auto key = std::make_pair(a.index_of(inputs.at(0)), a.index_of(inputs.at(1)));
    if (v == 0)
      a.pairing.erase(key);
    else
      a.pairing[key] = v;
  } else {
    std::vector<int> in;
    for (const auto& s : inputs) in.push_back(a.index_of(s));
    Vector& out = a.operations[in];
    const int o = a.index_of(output);
    if (v == 0)
      out.erase(o);
    else
      out[o] = v;
    if (out.empty()) a.operations.erase(in);
  }
  check_structure(a);
  return a;
}

std::vector<Mutation> documented_mutations() {
  using K = Mutation::Kind;
  return {
      {"Qx2", K::operation, {"1", "1"}, "1", "2", "m2(1,1) = 2*1"},
      {"Qx2", K::operation, {"1", "x"}, "x", "0", "m2(1,x) = 0"},
      {"Qx3", K::pairing, {"x", "x"}, "", "2", "<x,x> = 2"},
      {"Qx3", K::operation, {"x", "x2"}, "x2", "1", "m2(x,x2) = x2"},
      {"S2", K::pairing, {"1", "x"}, "", "2", "<1,x> = 2"},
      {"S2", K::operation, {"x", "1"}, "x", "2", "m2(x,1) = 2x"},
      {"S1", K::operation, {"a", "1"}, "a", "-1", "m2(a,1) = -a"},
      {"S1", K::operation, {"1", "1", "1"}, "a", "1", "m3(1,1,1) = a"},
      {"Qx3", K::operation, {"x2", "x"}, "x", "1", "m2(x2,x) = x"},
      {"S2", K::operation, {"1", "1"}, "1", "2", "m2(1,1) = 2*1"},
  };
}

}  // namespace bonnet::cinfty
