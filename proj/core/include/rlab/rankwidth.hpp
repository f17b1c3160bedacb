#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlab/cuts.hpp"
#include "rlab/graph.hpp"
#include "rlab/options.hpp"

namespace rlab {

/// Unrooted tree whose internal nodes have degree at most 3 and whose leaves
/// are labeled bijectively by the vertices of a graph. Removing a tree edge
/// splits the labels into the two sides of a separation.
class DecompositionTree {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  std::size_t add_leaf(std::size_t vertex);
  std::size_t add_internal();
  void add_edge(std::size_t a, std::size_t b);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_[node]; }
  std::optional<std::size_t> leaf_vertex(std::size_t node) const { return label_[node]; }
  // In insertion order, each as (a, b) exactly as added.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Throws InputError unless this is a valid decomposition for n vertices.
  void validate(std::size_t n) const;

  // Labels of the leaves on `toward`'s side of the edge {from, toward}.
  VertexSet side(std::size_t from, std::size_t toward, std::size_t n) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::optional<std::size_t>> label_;
  std::vector<Edge> edges_;
};

// Max cutrank over tree edges; 0 when the tree has no edges.
std::size_t width_of(const Graph& g, const DecompositionTree& t);

struct RankwidthResult {
  std::size_t value = 0;
  DecompositionTree tree;
};

// Exact rankwidth by subset dynamic programming over rooted cubic trees.
RankwidthResult rankwidth_exact(const Graph& g, const SearchOptions& opts = {});

// Caterpillar decomposition along `order` (default: degree descending, ties by
// index). Always an upper bound on rankwidth.
RankwidthResult rankwidth_upper_linear(const Graph& g,
                                       const std::optional<std::vector<std::size_t>>& order = {});

// Tree edge reached by walking from the first edge toward the heavier side
// until the leaf split is (1/3, 2/3)-balanced. Requires at least 2 leaves.
DecompositionTree::Edge balanced_edge(const DecompositionTree& t, std::size_t n);

struct BalancedCut {
  Separation separation;  // x is the subset_less-smaller side
  DecompositionTree::Edge edge;
};

BalancedCut balanced_cut_from_decomposition(const Graph& g, const DecompositionTree& t);

// Nested {"leaf": v} / {"children": [...]} rooted at balanced_edge(); a
// single leaf serializes as {"leaf": 0} and the empty tree as {}.
std::string tree_to_json(const DecompositionTree& t, std::size_t n);

}  // namespace rlab
