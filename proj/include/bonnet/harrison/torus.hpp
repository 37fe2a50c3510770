#pragma once

#include "bonnet/harrison/tensor_word.hpp"
#include "bonnet/linalg/chain_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace bonnet::harrison {

// Quotient of A^{⊗n} by the span of the shuffle products u∗v, |u|+|v| = n.
// Shuffles preserve the multiset of letters, so the work splits into blocks.
struct ShuffleQuotientBasis {
  int weight = 0;
  std::size_t words = 0;           // dim A^{⊗n}
  std::size_t shuffle_dim = 0;     // dim of the shuffle subspace
  std::vector<TensorWord> section; // words spanning a complement
  // Non-section word -> its class written on the section.
  std::map<TensorWord, WordChain> projection;

  WordChain project(const WordChain& c) const;
};
ShuffleQuotientBasis shuffle_quotient(const CInftyAlgebra& a, int weight);

// Raw differential on A^{⊗n}: A∞ terms m_j, 2 <= j <= n, plus internal δ.
WordChain torus_differential(const CInftyAlgebra& a, const TensorWord& w);

struct TorusDegree {
  int degree;
  std::vector<TensorWord> basis;  // section words, by weight then word
  bool complete;
  std::vector<int> weights;       // weights with a section word here
};

struct TorusComplex {
  int weight_cap = 0;
  linalg::GradedChainComplex complex;
  std::vector<TorusDegree> degrees;  // from complex.min_degree()
  std::vector<ShuffleQuotientBasis> quotients;  // weights 1..W
};

// Throws std::invalid_argument if W < 1.
TorusComplex torus_complex(const CInftyAlgebra& a, int weight_cap);

// Degree D is complete iff no word of weight > W has total degree in
// {D-1, D, D+1}. Needs every letter degree >= 0; otherwise nothing is complete.
bool degree_complete(const CInftyAlgebra& a, int weight_cap, int degree);

struct HarrisonEntry {
  int degree;
  std::size_t dim;
  std::size_t betti;
  bool complete;
  std::vector<int> weights;
};
std::vector<HarrisonEntry> harrison_betti(const CInftyAlgebra& a, int weight_cap, unsigned jobs = 1);
std::vector<HarrisonEntry> harrison_betti(const TorusComplex& t, unsigned jobs = 1);

struct IdealReport {
  bool ok = true;
  std::size_t generators = 0;
  std::string witness;  // first shuffle product whose image leaves the ideal
};
// d(u∗v) lies in the shuffle span of every weight, for all |u|+|v| <= W.
IdealReport check_ideal_preservation(const CInftyAlgebra& a, int weight_cap);

}  // namespace bonnet::harrison
