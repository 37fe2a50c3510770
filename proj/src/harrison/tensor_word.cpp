#include "bonnet/harrison/tensor_word.hpp"

namespace bonnet::harrison {

void add_to(WordChain& c, const TensorWord& w, const Rational& x) {
  if (x == 0) return;
  auto [it, fresh] = c.emplace(w, x);
  if (!fresh) {
    it->second += x;
    if (it->second == 0) c.erase(it);
  }
}

void add_to(WordChain& c, const WordChain& d, const Rational& x) {
  for (const auto& [w, y] : d) add_to(c, w, x * y);
}

int total_degree(const CInftyAlgebra& a, const TensorWord& w) {
  int d = w.weight();
  for (int l : w.letters) d += a.degree(l);
  return d;
}

std::vector<int> letter_degrees(const CInftyAlgebra& a, const TensorWord& w) {
  std::vector<int> out;
  for (int l : w.letters) out.push_back(a.degree(l));
  return out;
}

WordChain shuffle_product(const CInftyAlgebra& a, const TensorWord& u, const TensorWord& v) {
  TensorWord uv = u;
  uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
  const auto deg = letter_degrees(a, uv);
  WordChain out;
  for (const auto& order : cinfty::shuffles(u.weight(), v.weight())) {
    TensorWord w;
    for (int k : order) w.letters.push_back(uv.letters[k]);
    add_to(out, w, cinfty::shuffle_sign(order, deg));
  }
  return out;
}

std::string to_string(const CInftyAlgebra& a, const TensorWord& w) {
  std::string s;
  for (int l : w.letters) s += (s.empty() ? "" : "⊗") + a.basis[l].name;
  return s;
}

std::string to_string(const CInftyAlgebra& a, const WordChain& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [w, x] : c) s += (s.empty() ? "" : " + ") + linalg::to_string(x) + " " + to_string(a, w);
  return s;
}

}  // namespace bonnet::harrison
