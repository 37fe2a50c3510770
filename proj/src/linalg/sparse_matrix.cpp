#include "bonnet/linalg/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bonnet::linalg {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Rational SparseMatrix::at(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseMatrix::add(int r, int c, const Rational& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseMatrix::set(int r, int c, const Rational& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (value == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

std::string SparseMatrix::dump() const {
  std::ostringstream out;
  for (const auto& [rc, v] : entries_)
    out << rc.first << ' ' << rc.second << ' ' << to_string(v) << '\n';
  return out.str();
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in multiply");
  std::vector<std::vector<std::pair<int, Rational>>> brows(b.rows());
  for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, v);
  SparseMatrix out(a.rows(), b.cols());
  for (const auto& [rc, v] : a.entries())
    for (const auto& [c, w] : brows[rc.second]) out.add(rc.first, c, v * w);
  return out;
}

namespace {

using Row = std::vector<std::pair<int, Integer>>;

void make_primitive(Row& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - a * pivot, where a = target[col], p = pivot[col].
void eliminate(Row& target, const Row& pivot, int col) {
  Integer a, p;
  for (const auto& [c, v] : target)
    if (c == col) a = v;
  for (const auto& [c, v] : pivot)
    if (c == col) p = v;
  Row out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, p * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -a * pivot[j].second);
      ++j;
    } else {
      Integer v = p * target[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  // Clear denominators row by row, then fraction-free elimination with
  // primitive rows. Pivot row: the shortest remaining row.
  std::vector<Row> rows(m.rows());
  {
    std::vector<std::vector<std::pair<int, Rational>>> q(m.rows());
    for (const auto& [rc, v] : m.entries()) q[rc.first].emplace_back(rc.second, v);
    for (int r = 0; r < m.rows(); ++r) {
      Integer l = 1;
      for (const auto& [c, v] : q[r]) l = lcm(l, v.get_den());
      for (const auto& [c, v] : q[r]) rows[r].emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
      make_primitive(rows[r]);
    }
  }
  std::vector<std::vector<int>> col_rows(m.cols());
  std::vector<char> active(m.rows(), 1);
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);

  std::size_t result = 0;
  for (;;) {
    int best = -1;
    for (int r = 0; r < m.rows(); ++r) {
      if (!active[r]) continue;
      if (rows[r].empty()) {
        active[r] = 0;
        continue;
      }
      if (best < 0 || rows[r].size() < rows[best].size()) best = r;
      if (rows[best].size() == 1) break;
    }
    if (best < 0) break;
    active[best] = 0;
    ++result;
    int col = rows[best].front().first;
    std::vector<int> touched;
    touched.swap(col_rows[col]);
    for (int r : touched) {
      if (!active[r]) continue;
      bool has = std::any_of(rows[r].begin(), rows[r].end(),
                             [&](const auto& e) { return e.first == col; });
      if (!has) continue;
      if (rows[best].size() == 1) {
        eliminate(rows[r], rows[best], col);
        continue;
      }
      std::vector<int> old_cols;
      for (const auto& e : rows[r]) old_cols.push_back(e.first);
      eliminate(rows[r], rows[best], col);
      for (const auto& [c, v] : rows[r])
        if (!std::binary_search(old_cols.begin(), old_cols.end(), c)) col_rows[c].push_back(r);
    }
  }
  return result;
}

std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace bonnet::linalg
