#include "bonnet/linalg/chain_complex.hpp"

#include <future>
#include <stdexcept>

namespace bonnet::linalg {

GradedChainComplex::GradedChainComplex(int min_degree, std::vector<std::vector<std::string>> basis)
    : min_degree_(min_degree), basis_(std::move(basis)) {
  d_.reserve(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    int below = k == 0 ? 0 : static_cast<int>(basis_[k - 1].size());
    d_.emplace_back(below, static_cast<int>(basis_[k].size()));
  }
}

std::size_t GradedChainComplex::dim(int degree) const {
  if (degree < min_degree_ || degree > max_degree()) return 0;
  return basis_[degree - min_degree_].size();
}

const std::vector<std::string>& GradedChainComplex::basis(int degree) const {
  static const std::vector<std::string> none;
  if (degree < min_degree_ || degree > max_degree()) return none;
  return basis_[degree - min_degree_];
}

const SparseMatrix& GradedChainComplex::differential(int degree) const {
  if (degree < min_degree_ || degree > max_degree())
    throw std::out_of_range("no differential in degree " + std::to_string(degree));
  return d_[degree - min_degree_];
}

void GradedChainComplex::set_differential(int degree, SparseMatrix m) {
  if (degree < min_degree_ || degree > max_degree())
    throw std::out_of_range("no differential in degree " + std::to_string(degree));
  if (m.rows() != static_cast<int>(dim(degree - 1)) || m.cols() != static_cast<int>(dim(degree)))
    throw std::invalid_argument("differential shape mismatch in degree " + std::to_string(degree));
  d_[degree - min_degree_] = std::move(m);
}

DdReport verify_dd_zero(const GradedChainComplex& c) {
  DdReport report;
  for (int k = c.min_degree() + 2; k <= c.max_degree(); ++k) {
    report.degrees_checked.push_back(k);
    SparseMatrix dd = multiply(c.differential(k - 1), c.differential(k));
    for (const auto& [rc, v] : dd.entries()) {
      report.ok = false;
      report.failures.push_back({k, c.basis(k)[rc.second], c.basis(k - 2)[rc.first], v});
    }
  }
  return report;
}

std::vector<BettiEntry> betti(const GradedChainComplex& c, int jobs) {
  if (!verify_dd_zero(c).ok) throw std::domain_error("betti: d∘d ≠ 0");
  std::vector<BettiEntry> out;
  if (c.empty()) return out;
  int lo = c.min_degree(), hi = c.max_degree();
  std::vector<std::size_t> ranks(hi - lo + 1, 0);
  if (jobs > 1) {
    std::vector<std::future<std::size_t>> fut;
    for (int k = lo; k <= hi; ++k)
      fut.push_back(std::async(std::launch::async, [&c, k] { return rank(c.differential(k)); }));
    for (int k = lo; k <= hi; ++k) ranks[k - lo] = fut[k - lo].get();
  } else {
    for (int k = lo; k <= hi; ++k) ranks[k - lo] = rank(c.differential(k));
  }
  for (int k = lo; k <= hi; ++k) {
    std::size_t in = k < hi ? ranks[k + 1 - lo] : 0;
    std::size_t dim = c.dim(k);
    out.push_back({k, dim, ranks[k - lo], dim - ranks[k - lo] - in});
  }
  return out;
}

long euler_from_dims(const std::vector<BettiEntry>& b) {
  long x = 0;
  for (const auto& e : b) x += (e.degree % 2 == 0 ? 1 : -1) * static_cast<long>(e.dim);
  return x;
}

long euler_from_betti(const std::vector<BettiEntry>& b) {
  long x = 0;
  for (const auto& e : b) x += (e.degree % 2 == 0 ? 1 : -1) * static_cast<long>(e.betti);
  return x;
}

}  // namespace bonnet::linalg
