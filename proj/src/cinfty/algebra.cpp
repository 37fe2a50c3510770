#include "bonnet/cinfty/algebra.hpp"

#include "bonnet/linalg/sparse_matrix.hpp"

#include <stdexcept>

namespace bonnet::cinfty {

void add_to(Vector& v, int i, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

void add_to(Vector& v, const Vector& w, const Rational& c) {
  for (const auto& [i, x] : w) add_to(v, i, x * c);
}

Vector basis_vector(int i) { return {{i, Rational(1)}}; }

int CInftyAlgebra::index_of(const std::string& n) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i].name == n) return i;
  throw std::invalid_argument("unknown generator: " + n);
}

int CInftyAlgebra::top_arity() const {
  int k = 0;
  for (const auto& [in, out] : operations)
    if (!out.empty()) k = std::max(k, static_cast<int>(in.size()));
  return k;
}

Vector CInftyAlgebra::delta(const Vector& v) const {
  Vector out;
  for (const auto& [i, c] : v)
    if (auto it = differential.find(i); it != differential.end()) add_to(out, it->second, c);
  return out;
}

Vector CInftyAlgebra::m(const std::vector<int>& inputs) const {
  auto it = operations.find(inputs);
  return it == operations.end() ? Vector{} : it->second;
}

Vector CInftyAlgebra::m(const std::vector<Vector>& inputs) const {
  Vector out;
  std::vector<int> idx(inputs.size());
  auto rec = [&](auto& self, std::size_t k, const Rational& c) -> void {
    if (k == inputs.size()) {
      add_to(out, m(idx), c);
      return;
    }
    for (const auto& [i, x] : inputs[k]) {
      idx[k] = i;
      self(self, k + 1, c * x);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

Rational CInftyAlgebra::pair(const Vector& a, const Vector& b) const {
  Rational s = 0;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      if (auto it = pairing.find({i, j}); it != pairing.end()) s += x * y * it->second;
  return s;
}

void check_structure(const CInftyAlgebra& a) {
  auto fail = [&](const std::string& s) { throw std::invalid_argument(a.name + ": " + s); };
  if (a.basis.empty()) fail("empty basis");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (a.basis[i].name == a.basis[j].name) fail("duplicate generator " + a.basis[i].name);
  if (a.arity_cap < 2) fail("arity cap below 2");
  auto in_range = [&](int i) { return i >= 0 && i < a.dim(); };
  for (const auto& [s, img] : a.differential) {
    if (!in_range(s)) fail("differential source out of range");
    for (const auto& [t, c] : img) {
      if (!in_range(t)) fail("differential target out of range");
      if (a.degree(t) != a.degree(s) - 1)
        fail("differential not of degree -1 at " + a.basis[s].name + " -> " + a.basis[t].name);
    }
  }
  for (const auto& [s, img] : a.differential)
    if (!a.delta(img).empty()) fail("differential does not square to zero at " + a.basis[s].name);
  for (const auto& [in, out] : a.operations) {
    const int k = static_cast<int>(in.size());
    if (k < 2) fail("operation of arity below 2");
    if (k > a.arity_cap && !out.empty()) fail("operation above the arity cap");
    int d = k - 2;
    for (int i : in) {
      if (!in_range(i)) fail("operation input out of range");
      d += a.degree(i);
    }
    for (const auto& [o, c] : out) {
      if (!in_range(o)) fail("operation output out of range");
      if (a.degree(o) != d) {
        std::string w;
        for (int i : in) w += (w.empty() ? "" : ",") + a.basis[i].name;
        fail("m_" + std::to_string(k) + "(" + w + ") -> " + a.basis[o].name + " is not of degree " + std::to_string(k - 2));
      }
    }
  }
  if (a.has_pairing()) {
    linalg::SparseMatrix p(a.dim(), a.dim());
    for (const auto& [ij, c] : a.pairing) {
      if (!in_range(ij.first) || !in_range(ij.second)) fail("pairing index out of range");
      p.set(ij.first, ij.second, c);
    }
    if (linalg::rank(p) != static_cast<std::size_t>(a.dim())) fail("singular pairing");
  }
}

std::vector<std::vector<int>> shuffles(int p, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int i, int j) -> void {
    if (i == p && j == q) {
      out.push_back(cur);
      return;
    }
    if (i < p) {
      cur.push_back(i);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < q) {
      cur.push_back(p + j);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

int shuffle_sign(const std::vector<int>& order, const std::vector<int>& degrees) {
  int sign = 1;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (order[a] > order[b]) {
        sign = -sign;
        if ((degrees[order[a]] * degrees[order[b]]) % 2) sign = -sign;
      }
  return sign;
}

}  // namespace bonnet::cinfty
