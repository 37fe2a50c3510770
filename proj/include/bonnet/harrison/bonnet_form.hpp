#pragma once

#include "bonnet/harrison/tensor_word.hpp"
#include "bonnet/operad/labelled_graph.hpp"

#include <string>
#include <vector>

namespace bonnet::harrison {

// A generator x of G_(0,n,1)(Bar(Comm)) together with a word a_1 ⊗ ... ⊗ a_n,
// letter i sitting on in-leaf i, rewritten as B(m) ⊗ A^{⊗m}: every open part
// of x acts on its letters. Only m_2 is available, so a part acts nontrivially
// only when it is a binary tree of corollas.
struct BonnetForm {
  operad::LabelledGraph bonnet;  // canonical representative
  std::vector<int> code;
  WordChain word;                // empty means the element is zero

  bool zero() const { return word.empty(); }
  int degree() const;
};
bool same_form(const BonnetForm& a, const BonnetForm& b);
std::string to_string(const cinfty::CInftyAlgebra& a, const BonnetForm& f);

// Throws std::invalid_argument if the algebra has operations beyond m_2, or if
// the word length differs from the number of in-leaves.
BonnetForm bonnet_representative(const cinfty::CInftyAlgebra& a, const operad::LabelledGraph& x, const TensorWord& word);

// One rewriting step: vertex u, whose neighbours other than its parent are
// leaves, is absorbed into the word. Returns the new element and chain.
struct Absorbed {
  operad::LabelledGraph element;
  WordChain word;
};
Absorbed absorb_vertex(const cinfty::CInftyAlgebra& a, const operad::LabelledGraph& x, const WordChain& word, int u);

// Vertices that can be absorbed right now.
std::vector<int> absorbable_vertices(const operad::LabelledGraph& x);

struct ConfluenceReport {
  bool ok = true;
  std::size_t orders = 0;  // complete rewriting sequences explored
  std::string detail;
};
// Every absorption order ends at the same normal form as bonnet_representative.
ConfluenceReport check_confluence(const cinfty::CInftyAlgebra& a, const operad::LabelledGraph& x, const TensorWord& word);

}  // namespace bonnet::harrison
