#pragma once

#include "bonnet/cinfty/algebra.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace bonnet::harrison {

using cinfty::CInftyAlgebra;
using linalg::Rational;

// a_1 ⊗ ... ⊗ a_n as basis indices.
struct TensorWord {
  std::vector<int> letters;
  int weight() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const TensorWord&) const = default;
};

using WordChain = std::map<TensorWord, Rational>;
void add_to(WordChain& c, const TensorWord& w, const Rational& x);
void add_to(WordChain& c, const WordChain& d, const Rational& x = 1);

// n + Σ|a_i|.
int total_degree(const CInftyAlgebra& a, const TensorWord& w);
std::vector<int> letter_degrees(const CInftyAlgebra& a, const TensorWord& w);

// Σ over Sh(|u|, |v|) of sign(σ) × Koszul sign × σ(u v).
WordChain shuffle_product(const CInftyAlgebra& a, const TensorWord& u, const TensorWord& v);

std::string to_string(const CInftyAlgebra& a, const TensorWord& w);
std::string to_string(const CInftyAlgebra& a, const WordChain& c);

}  // namespace bonnet::harrison
