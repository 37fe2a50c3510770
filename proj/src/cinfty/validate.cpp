#include "bonnet/cinfty/validate.hpp"

#include <algorithm>

namespace bonnet::cinfty {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

// Calls f on every tuple in [0, dim)^n until f returns false.
template <class F>
void for_tuples(int dim, int n, F&& f) {
  std::vector<int> t(n, 0);
  for (;;) {
    if (!f(t)) return;
    int i = n - 1;
    while (i >= 0 && t[i] == dim - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

std::vector<std::string> names(const CInftyAlgebra& a, const std::vector<int>& t) {
  std::vector<std::string> out;
  for (int i : t) out.push_back(a.basis[i].name);
  return out;
}

std::string show(const CInftyAlgebra& a, const Vector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) s += (s.empty() ? "" : " + ") + linalg::to_string(c) + "*" + a.basis[i].name;
  return s;
}

std::vector<Vector> basis_inputs(const std::vector<int>& t) {
  std::vector<Vector> v;
  for (int i : t) v.push_back(basis_vector(i));
  return v;
}

Vector ainfty_lhs(const CInftyAlgebra& a, const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  Vector out = a.delta(a.m(t));
  int prefix = 0;
  for (int k = 0; k < n; ++k) {
    auto in = basis_inputs(t);
    in[k] = a.delta(in[k]);
    const int sign = ((n + prefix) % 2 == 0) ? -1 : 1;
    add_to(out, a.m(in), sign);
    prefix += a.degree(t[k]);
  }
  return out;
}

Vector ainfty_rhs(const CInftyAlgebra& a, const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  Vector out;
  for (int j = 2; j <= n - 1; ++j)
    for (int s = 0; s <= n - j; ++s) {
      int ps = 0;
      for (int l = 0; l < s; ++l) ps += a.degree(t[l]);
      int e = j + s * (j + 1) + (j - 2) * ps;
      std::vector<Vector> in;
      for (int l = 0; l < s; ++l) in.push_back(basis_vector(t[l]));
      in.push_back(a.m(std::vector<int>(t.begin() + s, t.begin() + s + j)));
      for (int l = s + j; l < n; ++l) in.push_back(basis_vector(t[l]));
      add_to(out, a.m(in), (e % 2 == 0) ? 1 : -1);
    }
  return out;
}

}  // namespace

ValidationReport check_ainfty(const CInftyAlgebra& a, int max_arity) {
  ValidationReport r;
  r.arity_checked = std::min(max_arity, a.arity_cap);
  for (int n = 2; n <= r.arity_checked; ++n) {
    Check c{"ainfty", n, true, {}, ""};
    for_tuples(a.dim(), n, [&](const std::vector<int>& t) {
      Vector lhs = ainfty_lhs(a, t), rhs = ainfty_rhs(a, t);
      if (lhs == rhs) return true;
      c.pass = false;
      c.witness = names(a, t);
      c.detail = "lhs " + show(a, lhs) + ", rhs " + show(a, rhs);
      return false;
    });
    r.checks.push_back(std::move(c));
  }
  return r;
}

ValidationReport check_shuffle_vanishing(const CInftyAlgebra& a, int max_arity) {
  ValidationReport r;
  r.arity_checked = std::min(max_arity, a.arity_cap);
  for (int n = 2; n <= r.arity_checked; ++n) {
    Check c{"shuffle", n, true, {}, ""};
    for (int p = 1; p < n && c.pass; ++p) {
      const auto sh = shuffles(p, n - p);
      for_tuples(a.dim(), n, [&](const std::vector<int>& t) {
        std::vector<int> deg;
        for (int i : t) deg.push_back(a.degree(i));
        Vector sum;
        for (const auto& order : sh) {
          std::vector<int> in;
          for (int k : order) in.push_back(t[k]);
          add_to(sum, a.m(in), shuffle_sign(order, deg));
        }
        if (sum.empty()) return true;
        c.pass = false;
        c.witness = names(a, t);
        c.detail = "p=" + std::to_string(p) + ": " + show(a, sum);
        return false;
      });
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

ValidationReport check_cyclic(const CInftyAlgebra& a, int max_arity) {
  ValidationReport r;
  r.arity_checked = std::min(max_arity, a.arity_cap);
  if (!a.has_pairing()) {
    r.checks.push_back({"pairing", 0, false, {}, "no pairing"});
    return r;
  }
  Check sym{"pairing-symmetry", 2, true, {}, ""};
  for_tuples(a.dim(), 2, [&](const std::vector<int>& t) {
    Rational l = a.pair(basis_vector(t[0]), basis_vector(t[1]));
    Rational rr = a.pair(basis_vector(t[1]), basis_vector(t[0]));
    if ((a.degree(t[0]) * a.degree(t[1])) % 2) rr = -rr;
    if (l == rr) return true;
    sym.pass = false;
    sym.witness = names(a, t);
    sym.detail = linalg::to_string(l) + " vs " + linalg::to_string(rr);
    return false;
  });
  r.checks.push_back(std::move(sym));
  for (int n = 2; n <= r.arity_checked; ++n) {
    Check c{"cyclic", n, true, {}, ""};
    for_tuples(a.dim(), n + 1, [&](const std::vector<int>& t) {
      Rational l = a.pair(a.m(std::vector<int>(t.begin(), t.end() - 1)), basis_vector(t[n]));
      Rational rr = a.pair(a.m(std::vector<int>(t.begin() + 1, t.end())), basis_vector(t[0]));
      int mid = 0;
      for (int i = 1; i <= n - 1; ++i) mid += a.degree(t[i]);
      if (((n + 1) * a.degree(t[0]) * mid) % 2) rr = -rr;
      if (l == rr) return true;
      c.pass = false;
      c.witness = names(a, t);
      c.detail = linalg::to_string(l) + " vs " + linalg::to_string(rr);
      return false;
    });
    r.checks.push_back(std::move(c));
  }
  return r;
}

ValidationReport validate_all(const CInftyAlgebra& a, int max_arity) {
  ValidationReport r;
  r.arity_checked = std::min(max_arity, a.arity_cap);
  for (auto part : {check_ainfty(a, max_arity), check_shuffle_vanishing(a, max_arity), check_cyclic(a, max_arity)})
    for (auto& c : part.checks) r.checks.push_back(std::move(c));
  return r;
}

}  // namespace bonnet::cinfty
