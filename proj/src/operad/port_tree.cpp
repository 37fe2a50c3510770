#include "bonnet/operad/port_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bonnet::operad {

Mask full_mask(int ports) { return ports >= 32 ? ~Mask{0} : ((Mask{1} << ports) - 1); }
int popcount(Mask m) { return std::popcount(m); }

Mask normalise(Mask side, int ports) { return (side & 1u) ? (full_mask(ports) & ~side) : side; }

PortTree::PortTree(int ports, std::vector<Mask> splits) : ports_(ports), splits_(std::move(splits)) {
  if (ports < 1 || ports > 31) throw std::invalid_argument("port count out of range");
  std::sort(splits_.begin(), splits_.end());
  if (std::adjacent_find(splits_.begin(), splits_.end()) != splits_.end())
    throw std::invalid_argument("repeated split");
  for (Mask s : splits_) {
    if (s & 1u || s & ~full_mask(ports)) throw std::invalid_argument("split not normalised");
    if (popcount(s) < 2 || popcount(s) > ports - 2) throw std::invalid_argument("split too small");
  }
  for (std::size_t i = 0; i < splits_.size(); ++i)
    for (std::size_t j = i + 1; j < splits_.size(); ++j) {
      Mask a = splits_[i], b = splits_[j];
      if ((a & b) != 0 && (a & b) != a && (a & b) != b) throw std::invalid_argument("incompatible splits");
    }
}

int PortTree::index_of(Mask split) const {
  auto it = std::lower_bound(splits_.begin(), splits_.end(), split);
  return it != splits_.end() && *it == split ? static_cast<int>(it - splits_.begin()) : -1;
}

bool PortTree::separates(int p, int q) const {
  for (Mask s : splits_)
    if (((s >> p) & 1u) != ((s >> q) & 1u)) return true;
  return false;
}

int PortTree::node_of_port(int p) const {
  int best = -1;
  for (std::size_t i = 0; i < splits_.size(); ++i)
    if ((splits_[i] >> p) & 1u)
      if (best < 0 || popcount(splits_[i]) < popcount(splits_[best])) best = static_cast<int>(i);
  return best + 1;
}

int PortTree::parent_node(int split_index) const {
  Mask s = splits_[split_index];
  int best = -1;
  for (std::size_t i = 0; i < splits_.size(); ++i) {
    Mask t = splits_[i];
    if (t != s && (t & s) == s)
      if (best < 0 || popcount(t) < popcount(splits_[best])) best = static_cast<int>(i);
  }
  return best + 1;
}

PortTree PortTree::contract(Mask split) const {
  int i = index_of(split);
  if (i < 0) throw std::invalid_argument("contract: no such split");
  std::vector<Mask> rest = splits_;
  rest.erase(rest.begin() + i);
  return PortTree(ports_, std::move(rest));
}

PortTree PortTree::relabel(const std::vector<int>& perm) const {
  std::vector<Mask> out;
  for (Mask s : splits_) {
    Mask t = 0;
    for (int p = 0; p < ports_; ++p)
      if ((s >> p) & 1u) t |= Mask{1} << perm[p];
    out.push_back(normalise(t, ports_));
  }
  return PortTree(ports_, std::move(out));
}

std::vector<PortTree> enumerate_trees(int ports) {
  if (ports < 2) throw std::invalid_argument("trees need at least two ports");
  if (ports <= 3) return {PortTree::corolla(ports)};
  std::vector<PortTree> out;
  const int m = ports - 1;  // inserting port m
  const Mask bit = Mask{1} << m;
  for (const PortTree& t : enumerate_trees(m)) {
    const auto& sp = t.splits();
    auto below_or_equal = [&](Mask a) {  // splits containing a get the new port
      std::vector<Mask> r;
      for (Mask s : sp) r.push_back((s & a) == a ? (s | bit) : s);
      return r;
    };
    // attach to the root node
    out.emplace_back(ports, sp);
    // attach to the node under split i
    for (Mask s : sp) out.emplace_back(ports, below_or_equal(s));
    // subdivide the edge of port p
    for (int p = 0; p < m; ++p) {
      std::vector<Mask> r;
      if (p == 0) {
        r = sp;
        r.push_back(full_mask(m) & ~Mask{1});
      } else {
        r = below_or_equal(Mask{1} << p);
        r.push_back((Mask{1} << p) | bit);
      }
      out.emplace_back(ports, std::move(r));
    }
    // subdivide internal edge s: the new node sits above s
    for (Mask s : sp) {
      std::vector<Mask> r;
      for (Mask u : sp) r.push_back(u != s && (u & s) == s ? (u | bit) : u);
      r.push_back(s | bit);
      out.emplace_back(ports, std::move(r));
    }
  }
  return out;
}

}  // namespace bonnet::operad
