#include "bonnet/harrison/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace bonnet::harrison {

namespace {

// Words of weight n over dim letters, grouped by sorted content.
std::map<std::vector<int>, std::vector<TensorWord>> blocks(int dim, int n) {
  std::map<std::vector<int>, std::vector<TensorWord>> out;
  TensorWord w;
  w.letters.assign(n, 0);
  for (;;) {
    auto key = w.letters;
    std::sort(key.begin(), key.end());
    out[key].push_back(w);
    int i = n - 1;
    while (i >= 0 && w.letters[i] == dim - 1) w.letters[i--] = 0;
    if (i < 0) break;
    ++w.letters[i];
  }
  return out;
}

using Row = std::map<int, Rational>;

// Reduced row echelon form; returns rows keyed by pivot column.
std::map<int, Row> rref(std::vector<Row> rows) {
  std::map<int, Row> pivots;
  for (auto& r : rows) {
    // reduce against existing pivots
    for (auto it = r.begin(); it != r.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      Rational f = it->second;
      int col = it->first;
      for (const auto& [c, x] : p->second) {
        Rational& y = r[c];
        y -= f * x;
      }
      for (auto jt = r.begin(); jt != r.end();) jt = jt->second == 0 ? r.erase(jt) : std::next(jt);
      it = r.upper_bound(col);
    }
    if (r.empty()) continue;
    const int col = r.begin()->first;
    Rational inv = 1 / r.begin()->second;
    for (auto& [c, x] : r) x *= inv;
    for (auto& [pc, prow] : pivots) {
      auto it = prow.find(col);
      if (it == prow.end()) continue;
      Rational f = it->second;
      for (const auto& [c, x] : r) prow[c] -= f * x;
      for (auto jt = prow.begin(); jt != prow.end();) jt = jt->second == 0 ? prow.erase(jt) : std::next(jt);
    }
    pivots.emplace(col, std::move(r));
  }
  return pivots;
}

}  // namespace

WordChain ShuffleQuotientBasis::project(const WordChain& c) const {
  WordChain out;
  for (const auto& [w, x] : c) {
    auto it = projection.find(w);
    if (it == projection.end())
      add_to(out, w, x);
    else
      add_to(out, it->second, x);
  }
  return out;
}

ShuffleQuotientBasis shuffle_quotient(const CInftyAlgebra& a, int n) {
  ShuffleQuotientBasis q;
  q.weight = n;
  for (auto& [content, words] : blocks(a.dim(), n)) {
    q.words += words.size();
    if (n == 1) {
      q.section.insert(q.section.end(), words.begin(), words.end());
      continue;
    }
    std::map<TensorWord, int> col;
    for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = static_cast<int>(i);
    std::vector<Row> rows;
    for (const auto& w : words)
      for (int p = 1; p < n; ++p) {
        TensorWord u{{w.letters.begin(), w.letters.begin() + p}}, v{{w.letters.begin() + p, w.letters.end()}};
        Row r;
        for (const auto& [s, x] : shuffle_product(a, u, v)) r[col.at(s)] += x;
        for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
        if (!r.empty()) rows.push_back(std::move(r));
      }
    auto piv = rref(std::move(rows));
    q.shuffle_dim += piv.size();
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!piv.count(static_cast<int>(i))) q.section.push_back(words[i]);
    for (const auto& [pc, row] : piv) {
      WordChain img;
      for (const auto& [c, x] : row)
        if (c != pc) add_to(img, words[c], -x);
      q.projection.emplace(words[pc], std::move(img));
    }
  }
  std::sort(q.section.begin(), q.section.end());
  return q;
}

WordChain torus_differential(const CInftyAlgebra& a, const TensorWord& w) {
  const int n = w.weight();
  WordChain out;
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + a.degree(w.letters[i]);
  for (int j = 2; j <= n; ++j)
    for (int s = 0; s + j <= n; ++s) {
      const int e = j + s * (j + 1) + (j - 2) * prefix[s];
      const int sign = e % 2 == 0 ? 1 : -1;
      auto prod = a.m(std::vector<int>(w.letters.begin() + s, w.letters.begin() + s + j));
      for (const auto& [k, x] : prod) {
        TensorWord v;
        v.letters.assign(w.letters.begin(), w.letters.begin() + s);
        v.letters.push_back(k);
        v.letters.insert(v.letters.end(), w.letters.begin() + s + j, w.letters.end());
        add_to(out, v, x * sign);
      }
    }
  for (int i = 0; i < n; ++i) {
    auto it = a.differential.find(w.letters[i]);
    if (it == a.differential.end()) continue;
    const int sign = (n + prefix[i]) % 2 == 0 ? 1 : -1;
    for (const auto& [k, x] : it->second) {
      TensorWord v = w;
      v.letters[i] = k;
      add_to(out, v, x * sign);
    }
  }
  return out;
}

bool degree_complete(const CInftyAlgebra& a, int weight_cap, int degree) {
  int dmin = a.degree(0);
  for (const auto& g : a.basis) dmin = std::min(dmin, g.degree);
  if (dmin < 0) return false;
  return (weight_cap + 1) * (1 + dmin) > degree + 1;
}

TorusComplex torus_complex(const CInftyAlgebra& a, int weight_cap) {
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be at least 1");
  TorusComplex t;
  t.weight_cap = weight_cap;
  std::map<int, std::vector<TensorWord>> by_degree;
  for (int n = 1; n <= weight_cap; ++n) {
    t.quotients.push_back(shuffle_quotient(a, n));
    for (const auto& w : t.quotients.back().section) by_degree[total_degree(a, w)].push_back(w);
  }
  if (by_degree.empty()) return t;
  const int lo = by_degree.begin()->first, hi = by_degree.rbegin()->first;
  std::vector<std::vector<std::string>> tags;
  std::map<TensorWord, std::pair<int, int>> index;
  for (int d = lo; d <= hi; ++d) {
    TorusDegree td{d, by_degree[d], degree_complete(a, weight_cap, d), {}};
    std::sort(td.basis.begin(), td.basis.end(), [](const TensorWord& x, const TensorWord& y) {
      return x.weight() != y.weight() ? x.weight() < y.weight() : x < y;
    });
    tags.emplace_back();
    for (std::size_t i = 0; i < td.basis.size(); ++i) {
      index[td.basis[i]] = {d, static_cast<int>(i)};
      tags.back().push_back(to_string(a, td.basis[i]));
      if (td.weights.empty() || td.weights.back() != td.basis[i].weight()) td.weights.push_back(td.basis[i].weight());
    }
    t.degrees.push_back(std::move(td));
  }
  t.complex = linalg::GradedChainComplex(lo, std::move(tags));
  for (int d = lo + 1; d <= hi; ++d) {
    const auto& src = t.degrees[d - lo].basis;
    linalg::SparseMatrix m(static_cast<int>(t.degrees[d - 1 - lo].basis.size()), static_cast<int>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      WordChain raw = torus_differential(a, src[j]);
      std::map<int, WordChain> split;
      for (const auto& [w, x] : raw) add_to(split[w.weight()], w, x);
      for (const auto& [n, part] : split)
        for (const auto& [w, x] : t.quotients[n - 1].project(part)) {
          const auto& pos = index.at(w);
          if (pos.first != d - 1) throw std::logic_error("differential not of degree -1");
          m.add(pos.second, static_cast<int>(j), x);
        }
    }
    t.complex.set_differential(d, std::move(m));
  }
  return t;
}

std::vector<HarrisonEntry> harrison_betti(const CInftyAlgebra& a, int weight_cap, unsigned jobs) {
  return harrison_betti(torus_complex(a, weight_cap), jobs);
}

std::vector<HarrisonEntry> harrison_betti(const TorusComplex& t, unsigned jobs) {
  std::vector<HarrisonEntry> out;
  if (t.degrees.empty()) return out;
  auto b = linalg::betti(t.complex, jobs);
  for (std::size_t i = 0; i < b.size(); ++i)
    out.push_back({b[i].degree, b[i].dim, b[i].betti, t.degrees[i].complete, t.degrees[i].weights});
  return out;
}

IdealReport check_ideal_preservation(const CInftyAlgebra& a, int weight_cap) {
  IdealReport r;
  std::vector<ShuffleQuotientBasis> q;
  for (int n = 1; n <= weight_cap; ++n) q.push_back(shuffle_quotient(a, n));
  for (int n = 2; n <= weight_cap; ++n)
    for (const auto& [content, words] : blocks(a.dim(), n))
      for (const auto& w : words)
        for (int p = 1; p < n; ++p) {
          TensorWord u{{w.letters.begin(), w.letters.begin() + p}}, v{{w.letters.begin() + p, w.letters.end()}};
          ++r.generators;
          WordChain image;
          for (const auto& [s, x] : shuffle_product(a, u, v)) add_to(image, torus_differential(a, s), x);
          std::map<int, WordChain> split;
          for (const auto& [s, x] : image) add_to(split[s.weight()], s, x);
          for (const auto& [m, part] : split) {
            // the shuffle span is zero in weight 1
            if (!q[m - 1].project(part).empty()) {
              r.ok = false;
              r.witness = "d((" + to_string(a, u) + ")*(" + to_string(a, v) + ")) = " + to_string(a, image);
              return r;
            }
          }
        }
  return r;
}

}  // namespace bonnet::harrison
