#pragma once

#include <cstdint>
#include <vector>

namespace bonnet::operad {

using Mask = std::uint32_t;

// A tree with labelled ports 0..m-1 and internal nodes of valence >= 3,
// stored as its set of splits. Each internal edge is recorded as the set of
// ports on the side away from port 0. This is the Bar(Comm) label of a vertex
// with m half-edges; its degree is the number of internal edges.
class PortTree {
 public:
  PortTree() = default;
  // Throws std::invalid_argument unless the splits form a valid tree.
  PortTree(int ports, std::vector<Mask> splits);
  static PortTree corolla(int ports) { return PortTree(ports, {}); }

  int ports() const { return ports_; }
  int degree() const { return static_cast<int>(splits_.size()); }
  // Sorted ascending; this is the +1 ordering of the internal edges.
  const std::vector<Mask>& splits() const { return splits_; }
  int index_of(Mask split) const;  // -1 if absent
  bool separates(int p, int q) const;

  // Node structure: node 0 holds port 0; node i+1 sits below splits()[i].
  int num_nodes() const { return degree() + 1; }
  int node_of_port(int p) const;
  int parent_node(int split_index) const;

  PortTree contract(Mask split) const;
  // Rename ports: new port of p is perm[p] (perm is a bijection onto 0..m-1).
  PortTree relabel(const std::vector<int>& perm) const;

  friend bool operator==(const PortTree&, const PortTree&) = default;
  friend auto operator<=>(const PortTree&, const PortTree&) = default;

 private:
  int ports_ = 0;
  std::vector<Mask> splits_;
};

Mask full_mask(int ports);
int popcount(Mask m);

// Every tree on m ports (m >= 2), each exactly once.
std::vector<PortTree> enumerate_trees(int ports);

// Normalise a side to the one not containing port 0.
Mask normalise(Mask side, int ports);

}  // namespace bonnet::operad
