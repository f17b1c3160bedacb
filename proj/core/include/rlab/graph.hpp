#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlab/bit_matrix.hpp"
#include "rlab/vertex_set.hpp"

namespace rlab {

/// Finite simple undirected graph on vertices [0, n).
///
/// Immutable once built: every mutating path goes through GraphBuilder, which
/// keeps adjacency symmetric and loop-free.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const noexcept { return adj_.size(); }
  const VertexSet& neighbors(std::size_t v) const noexcept { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj_[u].contains(v); }
  std::size_t degree(std::size_t v) const noexcept { return adj_[v].size(); }
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Single-word adjacency, available when n <= 64.
  bool fits_mask() const noexcept { return adj_.size() <= 64; }
  std::uint64_t neighbor_mask(std::size_t v) const noexcept { return adj64_[v]; }
  const std::uint64_t* neighbor_masks() const noexcept { return adj64_.data(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> adj64_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  // Duplicate edges are collapsed; loops and out-of-range endpoints throw.
  GraphBuilder& add_edge(std::size_t u, std::size_t v);
  std::size_t n() const noexcept { return adj_.size(); }
  Graph build() &&;

 private:
  std::vector<VertexSet> adj_;
};

/// Induced subgraph plus the map from new vertex ids to original ids
/// (new vertex i is the i-th smallest member of the selected set).
struct InducedSubgraph {
  Graph graph;
  std::vector<std::size_t> to_original;

  VertexSet lift(const VertexSet& s, std::size_t host_n) const;
};

// graph6, short and long size headers. Throws ParseError with byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n <count>" then "u v" lines; '#' starts a comment. ParseError carries the
// 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Edge list when the first meaningful line starts with 'n' or '#', graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

// |x| x |y| matrix, rows and columns in increasing vertex order.
BitMatrix biadjacency(const Graph& g, const VertexSet& x, const VertexSet& y);

// G(n, p): pair (i, j), i < j, is an edge iff to_unit(counter_word(seed_key(seed),
// k)) < p where k is the pair's position in graph6 bit order.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
Graph gen_clique(std::size_t n);
// Cycle on n >= 3 vertices; for n < 3 the path on n vertices.
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_edgeless(std::size_t n);
// Parts [0, a) and [a, a + b); cross pairs drawn as in gen_gnp.
Graph gen_bipartite_random(std::size_t a, std::size_t b, double p, std::uint64_t seed);

// Throws ContractViolation when adjacency is asymmetric or has a loop.
void check_invariants(const Graph& g);

}  // namespace rlab
