#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bonnet::graph {

enum class Side : std::uint8_t { in = 0, out = 1 };

struct Label {
  Side side = Side::in;
  int index = 1;  // 1-based
  auto operator<=>(const Label&) const = default;
};

std::string to_string(Label l);

// Input for build_graph. Labels are attached to half-edges: a boundary label
// names the half-edge at a valence-1 vertex, a torus label names either
// half-edge of a loop.
struct GraphData {
  std::vector<int> pairing;
  std::vector<std::vector<int>> vertices;
  std::vector<std::pair<int, Label>> boundary;
  std::vector<std::pair<int, Label>> tori;
  bool allow_bivalent = false;
};

class Graph {
 public:
  Graph() = default;

  int num_half_edges() const { return static_cast<int>(pair_.size()); }
  int num_vertices() const { return static_cast<int>(star_.size()); }
  int num_edges() const { return static_cast<int>(edge_he_.size()); }

  int partner(int h) const { return pair_[h]; }
  int vertex_of(int h) const { return vertex_[h]; }
  int edge_of(int h) const { return edge_[h]; }
  const std::vector<int>& star(int v) const { return star_[v]; }
  int valence(int v) const { return static_cast<int>(star_[v].size()); }
  // Half-edges of edge e, smaller index first.
  std::pair<int, int> ends(int e) const { return edge_he_[e]; }
  std::pair<int, int> endpoints(int e) const {
    return {vertex_[edge_he_[e].first], vertex_[edge_he_[e].second]};
  }

  bool is_leaf(int v) const { return star_[v].size() == 1; }
  const std::optional<Label>& leaf_label(int v) const { return leaf_label_[v]; }
  const std::optional<Label>& torus_label(int e) const { return torus_label_[e]; }
  bool is_loop(int e) const;
  bool is_boundary(int e) const;
  bool is_internal(int e) const { return !is_boundary(e); }
  bool allow_bivalent() const { return allow_bivalent_; }

  int count_boundary(Side s) const;
  int count_tori(Side s) const;
  int num_internal_vertices() const;
  // Vertex with the given boundary label, or -1.
  int find_leaf(Label l) const;
  // Edge with the given torus label, or -1.
  int find_torus(Label l) const;

  GraphData data() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(const GraphData&);

  std::vector<int> pair_;
  std::vector<int> vertex_;
  std::vector<int> edge_;
  std::vector<std::vector<int>> star_;
  std::vector<std::pair<int, int>> edge_he_;
  std::vector<std::optional<Label>> leaf_label_;
  std::vector<std::optional<Label>> torus_label_;
  bool allow_bivalent_ = false;
};

// Throws std::invalid_argument on any structural violation.
Graph build_graph(const GraphData& d);

int num_components(const Graph& g);
int genus(const Graph& g);

// Preconditions: e internal, not a loop. Throws std::invalid_argument.
Graph collapse_edge(const Graph& g, int e);

struct Relabelled {
  Graph graph;
  std::vector<int> edge_map;    // old edge -> new edge, -1 if gone
  std::vector<int> vertex_map;  // old vertex -> new vertex
};
Relabelled collapse_edge_mapped(const Graph& g, int e);

// Rebuild g with half-edges renamed by perm (old -> new) and vertices by vperm.
Graph relabel(const Graph& g, const std::vector<int>& perm, const std::vector<int>& vperm);

}  // namespace bonnet::graph
