#include "bonnet/harrison/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace bonnet::harrison {

using cinfty::CInftyAlgebra;
using linalg::Rational;

namespace {

using Dense = std::vector<std::vector<Rational>>;
using Word = std::vector<int>;

std::size_t dense_rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Inverse of a square nonsingular matrix by Gauss-Jordan.
Dense invert(Dense m) {
  const std::size_t n = m.size();
  Dense inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational f = 1 / m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= f;
      inv[c][k] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational g = m[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] -= g * m[c][k];
        inv[i][k] -= g * inv[c][k];
      }
    }
  }
  return inv;
}

int parity(int x) { return ((x % 2) + 2) % 2; }

// All (p, n-p) shuffles of the letters of w as (word, sign): positions of the
// first p letters range over p-subsets of {0..n-1}.
std::vector<std::pair<Word, int>> shuffle_terms(const CInftyAlgebra& a, const Word& w, int p) {
  const int n = static_cast<int>(w.size());
  std::vector<std::pair<Word, int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    Word res(n);
    std::vector<int> src(n);
    int i = 0, j = p;
    for (int k = 0; k < n; ++k) src[k] = (mask >> k) & 1u ? i++ : j++;
    for (int k = 0; k < n; ++k) res[k] = w[src[k]];
    int sign = 1;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (src[x] > src[y]) sign *= parity(a.degree(w[src[x]]) * a.degree(w[src[y]])) ? 1 : -1;
    out.emplace_back(std::move(res), sign);
  }
  return out;
}

}  // namespace

std::vector<OracleEntry> harrison_oracle(const CInftyAlgebra& a, int weight_cap, unsigned seed) {
  for (const auto& [in, out] : a.operations)
    if (in.size() != 2 && !out.empty()) throw std::invalid_argument("oracle: only m_2 and the differential are supported");
  if (weight_cap < 1) throw std::invalid_argument("oracle: weight cap must be at least 1");
  const int dim = a.dim();
  std::mt19937 rng(seed);

  // quotient basis: chosen words, and for each block the inverse of [chosen; span]
  struct Block {
    std::vector<Word> words;
    std::map<Word, int> col;
    std::vector<int> chosen;  // columns
    Dense inverse;            // rows: chosen coordinates first, then span coordinates
  };
  std::map<Word, std::pair<int, int>> block_of;  // word -> (block id, column)
  std::vector<Block> blocks;
  std::map<Word, int> qindex;                    // chosen word -> position in its degree
  std::map<int, std::vector<Word>> qbasis;       // total degree -> chosen words

  for (int n = 1; n <= weight_cap; ++n) {
    std::map<Word, std::vector<Word>> by_content;
    Word w(n, 0);
    for (;;) {
      Word key = w;
      std::sort(key.begin(), key.end());
      by_content[key].push_back(w);
      int i = n - 1;
      while (i >= 0 && w[i] == dim - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
    for (auto& [content, words] : by_content) {
      Block b;
      b.words = words;
      const std::size_t m = words.size();
      for (std::size_t i = 0; i < m; ++i) b.col[words[i]] = static_cast<int>(i);
      Dense span;
      if (n >= 2)
        for (const auto& u : words)
          for (int p = 1; p < n; ++p) {
            std::vector<Rational> row(m);
            for (const auto& [s, sign] : shuffle_terms(a, u, p)) row[b.col[s]] += sign;
            span.push_back(std::move(row));
          }
      // independent span rows
      Dense basis;
      for (auto& r : span) {
        basis.push_back(r);
        if (dense_rank(basis) < basis.size()) basis.pop_back();
      }
      std::vector<int> order(m);
      for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
      std::shuffle(order.begin(), order.end(), rng);
      Dense full = basis;
      for (int c : order) {
        if (full.size() == m) break;
        std::vector<Rational> e(m);
        e[c] = 1;
        full.push_back(e);
        if (dense_rank(full) < full.size())
          full.pop_back();
        else
          b.chosen.push_back(c);
      }
      std::sort(b.chosen.begin(), b.chosen.end());
      Dense rows;
      for (int c : b.chosen) {
        std::vector<Rational> e(m);
        e[c] = 1;
        rows.push_back(e);
      }
      for (auto& r : basis) rows.push_back(r);
      // v = x * rows  =>  x = v * rows^{-1}
      b.inverse = invert(rows);
      const int id = static_cast<int>(blocks.size());
      for (std::size_t i = 0; i < m; ++i) block_of[words[i]] = {id, static_cast<int>(i)};
      for (int c : b.chosen) {
        int deg = n;
        for (int l : words[c]) deg += a.degree(l);
        qindex[words[c]] = static_cast<int>(qbasis[deg].size());
        qbasis[deg].push_back(words[c]);
      }
      blocks.push_back(std::move(b));
    }
  }

  // d on a word: Σ_s (-1)^s m_2(w_s, w_{s+1}) + Σ_i (-1)^{n + |w_0|+...+|w_{i-1}|} δ(w_i)
  auto d = [&](const Word& w) {
    std::map<Word, Rational> out;
    const int n = static_cast<int>(w.size());
    for (int s = 0; s + 1 < n; ++s) {
      auto it = a.operations.find({w[s], w[s + 1]});
      if (it == a.operations.end()) continue;
      for (const auto& [k, x] : it->second) {
        Word v(w.begin(), w.begin() + s);
        v.push_back(k);
        v.insert(v.end(), w.begin() + s + 2, w.end());
        out[v] += s % 2 ? -x : x;
      }
    }
    int pre = 0;
    for (int i = 0; i < n; ++i) {
      auto it = a.differential.find(w[i]);
      if (it != a.differential.end())
        for (const auto& [k, x] : it->second) {
          Word v = w;
          v[i] = k;
          out[v] += parity(n + pre) ? -x : x;
        }
      pre += a.degree(w[i]);
    }
    return out;
  };

  // quotient coordinates of a chain
  auto coords = [&](const std::map<Word, Rational>& c) {
    std::map<int, std::vector<Rational>> per_block;
    for (const auto& [w, x] : c) {
      if (x == 0) continue;
      auto [id, col] = block_of.at(w);
      auto& v = per_block[id];
      if (v.empty()) v.assign(blocks[id].words.size(), 0);
      v[col] += x;
    }
    std::map<Word, Rational> out;
    for (const auto& [id, v] : per_block) {
      const Block& b = blocks[id];
      for (std::size_t k = 0; k < b.chosen.size(); ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * b.inverse[i][k];
        if (s != 0) out[b.words[b.chosen[k]]] = s;
      }
    }
    return out;
  };

  std::vector<OracleEntry> out;
  if (qbasis.empty()) return out;
  const int lo = qbasis.begin()->first, hi = qbasis.rbegin()->first;
  std::vector<std::size_t> rank_out(hi - lo + 2, 0);  // rank of d leaving degree
  for (int deg = lo + 1; deg <= hi; ++deg) {
    const auto& src = qbasis[deg];
    const auto& tgt = qbasis[deg - 1];
    if (src.empty() || tgt.empty()) continue;
    Dense m(src.size(), std::vector<Rational>(tgt.size()));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [w, x] : coords(d(src[j]))) {
        if (!qindex.count(w) || std::find(tgt.begin(), tgt.end(), w) == tgt.end())
          throw std::logic_error("oracle: image outside the neighbouring degree");
        m[j][qindex[w]] = x;
      }
    rank_out[deg - lo] = dense_rank(m);
  }
  for (int deg = lo; deg <= hi; ++deg) {
    const std::size_t n = qbasis[deg].size();
    const std::size_t in = deg + 1 <= hi ? rank_out[deg + 1 - lo] : 0;
    out.push_back({deg, n, n - rank_out[deg - lo] - in});
  }
  return out;
}

}  // namespace bonnet::harrison
