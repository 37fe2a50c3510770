#pragma once

#include "bonnet/linalg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bonnet::cinfty {

using linalg::Rational;

// Sparse vector over the basis; zero coefficients are never stored.
using Vector = std::map<int, Rational>;
void add_to(Vector& v, int i, const Rational& c);
void add_to(Vector& v, const Vector& w, const Rational& c = 1);

struct Generator {
  std::string name;
  int degree;  // homological
  friend bool operator==(const Generator&, const Generator&) = default;
};

enum class Convention { homological, cohomological };

// Structure constants of an A∞ algebra truncated at arity_cap. Degrees are
// stored homologically whatever the file convention was.
struct CInftyAlgebra {
  std::string name;
  std::vector<Generator> basis;
  Convention convention = Convention::homological;
  int arity_cap = 2;
  std::map<int, Vector> differential;             // source -> δ(source)
  std::map<std::vector<int>, Vector> operations;  // inputs -> m_k(inputs), k = inputs.size()
  std::map<std::pair<int, int>, Rational> pairing;

  int dim() const { return static_cast<int>(basis.size()); }
  int degree(int i) const { return basis[i].degree; }
  // Throws std::invalid_argument for unknown names.
  int index_of(const std::string& name) const;
  // Highest arity with a nonzero constant, 0 if none.
  int top_arity() const;
  bool has_pairing() const { return !pairing.empty(); }
  bool is_strict() const { return top_arity() <= 2 && differential.empty(); }

  Vector delta(const Vector& v) const;
  Vector m(const std::vector<int>& inputs) const;
  Vector m(const std::vector<Vector>& inputs) const;
  Rational pair(const Vector& a, const Vector& b) const;

  friend bool operator==(const CInftyAlgebra&, const CInftyAlgebra&) = default;
};

Vector basis_vector(int i);

// Degrees, shapes, homogeneity (|m_k| = k - 2, |δ| = -1), δ² = 0, arity
// within the cap, nonsingular pairing. Throws std::invalid_argument.
void check_structure(const CInftyAlgebra& a);

// Sh(p, q) as output orders: entry k is the input position placed at k.
std::vector<std::vector<int>> shuffles(int p, int q);
// sign(σ) times the Koszul sign of moving letters of the given degrees.
int shuffle_sign(const std::vector<int>& order, const std::vector<int>& degrees);

}  // namespace bonnet::cinfty
