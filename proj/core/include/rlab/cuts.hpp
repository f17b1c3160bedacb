#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rlab/graph.hpp"
#include "rlab/options.hpp"
#include "rlab/vertex_set.hpp"

namespace rlab {

/// A separation (X, V \ X) of a host graph. Y is implicit.
struct Separation {
  VertexSet x;
  std::optional<std::size_t> cutrank;

  std::size_t n() const noexcept { return x.universe(); }
  VertexSet y() const { return x.complement(); }
};

// F2 rank of Adj(X, V \ X). Symmetric in X and its complement.
std::size_t cutrank(const Graph& g, const VertexSet& x);
// Mask form; requires g.n() <= 64.
std::size_t cutrank_mask(const Graph& g, std::uint64_t x);

// F2 rank of Adj(A, B) for disjoint A, B that need not cover V.
std::size_t cross_rank(const Graph& g, const VertexSet& a, const VertexSet& b);
std::size_t cross_rank_mask(const Graph& g, std::uint64_t a, std::uint64_t b);

Separation make_separation(const Graph& g, VertexSet x);

// (alpha, beta)-balance with exact integer cross-multiplication. Both bounds
// are applied to both sides: alpha_den*|S| >= alpha_num*n and
// beta_den*|S| <= beta_num*n for S in {X, Y}.
struct Balance {
  std::uint64_t alpha_num = 1;
  std::uint64_t alpha_den = 3;
  std::uint64_t beta_num = 2;
  std::uint64_t beta_den = 3;
};

bool is_balanced(std::size_t n, std::size_t x_size, const Balance& b = {});
bool is_balanced(const Graph& g, const VertexSet& x, const Balance& b = {});

// Smallest and largest |X| of a (1/3, 2/3)-balanced separation of n vertices;
// lo > hi when none exists (n <= 1).
std::size_t balanced_min_size(std::size_t n);
std::size_t balanced_max_size(std::size_t n);

struct MinBalResult {
  std::size_t value = 0;
  Separation witness;  // lexicographically least minimizer (subset_less)
};

// Exact minimum cutrank over balanced separations. For n <= 1 no balanced
// separation exists and the value is 0 with an empty witness. A rank-0 cut
// is looked up through connected components first, so graphs with one are
// solved at any size; otherwise the enumeration is subject to the budget.
MinBalResult min_bal_cutrank(const Graph& g, const SearchOptions& opts = {});

/// Exact non-negative fraction, always stored in lowest terms.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio of(std::uint64_t num, std::uint64_t den);
  std::string to_string() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

struct RankExpansionResult {
  Ratio value;
  VertexSet witness;  // lexicographically least maximizer; empty when n == 1
};

// max over nonempty S with 2|S| <= n of cutrank(S) / |S|. Throws InputError
// for n == 0; n == 1 has no admissible S and yields 0.
RankExpansionResult rank_expansion(const Graph& g, const SearchOptions& opts = {});

/// Partition of Y by neighborhood trace N(y) ∩ X. Classes are ordered by
/// their smallest member; signatures[i] is the common trace of classes[i].
struct NeighborhoodClasses {
  VertexSet x;
  VertexSet y;
  std::vector<VertexSet> classes;
  std::vector<VertexSet> signatures;

  std::size_t count() const noexcept { return classes.size(); }
  std::size_t nonzero_count() const noexcept;
};

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& x);
// Y given explicitly (disjoint from X, not necessarily its complement).
NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& x,
                                         const VertexSet& y);

// Largest S ⊆ X shattered by the signature family. An empty family shatters
// nothing and a single signature shatters only ∅; both give 0.
std::size_t vc_dimension(const NeighborhoodClasses& classes, const SearchOptions& opts = {});

using BigInt = boost::multiprecision::cpp_int;

// sum_{i=0}^{d} C(x_size, i). Throws InputError when d > x_size.
BigInt sauer_shelah_bound(std::size_t x_size, std::size_t d);

// One vertex (the smallest) per class of X under v ~ w iff N(v) ∩ Y = N(w) ∩ Y.
VertexSet compress_representatives(const Graph& g, const VertexSet& x);

// Rows of Adj(X, Y) picked by row_basis(); |result| == cutrank(g, x).
VertexSet minimal_row_set(const Graph& g, const VertexSet& x);

struct MaxMinBalResult {
  std::size_t value = 0;
  VertexSet witness;  // vertex set of the maximizing induced subgraph
};

// max over all vertex subsets S of min_bal_cutrank(G[S]).
MaxMinBalResult max_min_bal_cutrank_over_induced(const Graph& g,
                                                 const SearchOptions& opts = {});

// {parameter, value, witness_bitset_hex, n, elapsed_ms}. `value_json` is
// spliced verbatim, so pass a JSON number or quoted string.
std::string parameter_record_json(const std::string& parameter, const std::string& value_json,
                                  const VertexSet& witness, std::size_t n, double elapsed_ms);

}  // namespace rlab
