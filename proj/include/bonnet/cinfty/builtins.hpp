#pragma once

#include "bonnet/cinfty/algebra.hpp"

#include <string>
#include <vector>

namespace bonnet::cinfty {

struct BuiltinInfo {
  std::string key;  // Q, Qx2, Qx3, S2, S1
  std::string description;
};
std::vector<BuiltinInfo> builtin_list();

// Throws std::invalid_argument for an unknown key.
CInftyAlgebra builtin_algebra(const std::string& key);
std::vector<CInftyAlgebra> builtin_algebras();

// A single structure constant of a built-in set to a new value.
struct Mutation {
  std::string algebra;
  enum class Kind { operation, pairing } kind;
  std::vector<std::string> inputs;  // operation inputs, or the two paired generators
  std::string output;               // operations only
  std::string value;
  std::string description;

  CInftyAlgebra apply() const;
};

// Each of these makes at least one validator fail.
std::vector<Mutation> documented_mutations();

}  // namespace bonnet::cinfty
