#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlab/cuts.hpp"
#include "rlab/graph.hpp"
#include "rlab/options.hpp"
#include "rlab/vertex_set.hpp"

namespace rlab {

// Hard representation limit for the tangle routines (mask tables of size 2^n).
inline constexpr std::size_t kTangleHardCap = 22;

// Every separation (X, V \ X) with cutrank < k, stored once under its
// subset_less-smaller side, sorted by (cutrank, side). Includes (∅, V).
std::vector<Separation> enumerate_low_rank_separations(const Graph& g, std::size_t k,
                                                       const SearchOptions& opts = {});

// kStandard adds the singleton axiom: V \ {v} is never a small side.
// kLiteral uses only the covering and exactly-one axioms.
enum class TangleAxioms { kStandard, kLiteral };

std::string to_string(TangleAxioms a);
TangleAxioms parse_axioms(std::string_view text);

struct OrientedSeparation {
  VertexSet side;  // canonical (subset_less-smaller) side
  std::size_t cutrank = 0;
  bool side_is_small = true;

  VertexSet small() const { return side_is_small ? side : side.complement(); }
  VertexSet large() const { return side_is_small ? side.complement() : side; }
};

struct TangleOracle {
  std::size_t n = 0;
  std::size_t order = 0;
  TangleAxioms axioms = TangleAxioms::kStandard;
  std::vector<OrientedSeparation> entries;

  // nullopt when (s, V \ s) is not in the table.
  std::optional<bool> is_small(const VertexSet& s) const;
  std::vector<VertexSet> small_sides() const;

  // {n, graph6, order, axioms, orientation: [{side_hex, cutrank, small}]}
  // with small in {"side", "complement"}.
  std::string to_json(const Graph& g) const;
  static TangleOracle from_json(std::string_view text);
};

struct TangleSearch {
  std::optional<TangleOracle> tangle;
  // When no tangle exists: separations that already admit no orientation.
  std::vector<Separation> core;
  bool core_minimal = false;
  std::size_t separations = 0;
  std::uint64_t nodes = 0;
};

struct TangleSearchOptions {
  TangleAxioms axioms = TangleAxioms::kStandard;
  bool shrink_core = true;  // deletion-minimize cores of up to 256 separations
};

TangleSearch find_tangle(const Graph& g, std::size_t k, const SearchOptions& opts = {},
                         const TangleSearchOptions& tso = {});

struct TangleVerdict {
  bool valid = true;
  std::string kind;  // host, extra, duplicate, missing, singleton, cover
  std::string message;
  std::vector<VertexSet> witness;
};

TangleVerdict verify_tangle(const Graph& g, const TangleOracle& oracle,
                            const SearchOptions& opts = {});

struct WellBehavedParams {
  std::size_t r = 1;
  std::optional<std::size_t> s;  // default 3|Y|
  std::uint64_t eps_num = 1;
  std::uint64_t eps_den = 7;
};

struct WellBehavedResult {
  bool well_behaved = true;
  // First failing partition (A, B) of X in subset_less order of A.
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;
  std::size_t cut_a_y = 0;  // cutrank(A, Y) of the counterexample
  std::size_t cut_b = 0;    // cutrank(A ∪ Y, B)
};

// For every partition (A, B) of X with cutrank(A, Y) <= 70r and |A| <= 6s,
// require eps_den * cutrank(A ∪ Y, B) >= 420 * r * eps_num.
WellBehavedResult is_well_behaved(const Graph& g, const VertexSet& x, const WellBehavedParams& p,
                                  const SearchOptions& opts = {});

// Among table entries with cutrank < rank_bound, the small side of maximum
// size, then minimum cutrank, then subset_less-least. Throws InputError when
// oracle.order < rank_bound or nothing qualifies.
Separation maximal_oriented_separation(const Graph& g, const TangleOracle& oracle,
                                       std::size_t rank_bound);

// (U1, U2) of the given induced subgraph in its own coordinates, or nullopt
// to stop amplifying.
using CutProvider =
    std::function<std::optional<std::pair<VertexSet, VertexSet>>(const Graph& sub, std::size_t r)>;

// Exact min_bal_cutrank witness when its value is < r; U1 is the witness
// side (never the larger one). Refuses when n < 2, value >= r, or over budget.
CutProvider default_cut_provider(const SearchOptions& opts = {});

struct AmplificationStep {
  VertexSet x;
  VertexSet y;
  std::size_t cutrank = 0;
  // The cut of G[y] used to move on; empty on the final step.
  std::optional<std::pair<VertexSet, VertexSet>> cut;  // host coordinates
  std::size_t cut_rank = 0;                            // cutrank in G[y]
};

struct AmplificationTrace {
  std::size_t r = 0;
  std::size_t requested_steps = 0;
  std::vector<AmplificationStep> steps;  // steps[i] holds (X_i, Y_i)
  bool completed = false;                // requested_steps cuts were applied
  std::string stop_reason;
  bool bounds_hold = true;
  std::string violation;

  std::size_t applied() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
  std::string to_json() const;
};

// (X_{i+1}, Y_{i+1}) = (X_i ∪ U1, U2). Checks the per-step bound
// cutrank_{i+1} < cutrank_i + r, the aggregate bound, the chain monotonicity
// and |Y_{i+1}| <= floor(2|Y_i| / 3). Throws ContractViolation when the
// provider's cut is not a balanced partition of rank < r.
AmplificationTrace amplify(const Graph& g, const VertexSet& x0, std::size_t r,
                           std::size_t steps = 8, const CutProvider& provider = {});

struct SplitResult {
  InducedSubgraph h;      // G[Y ∪ X**]
  VertexSet x_star_star;  // host coordinates
  VertexSet x_in_h;       // X** in H' coordinates
  VertexSet y_in_h;       // Y in H' coordinates
  std::size_t cutrank_h = 0;       // cutrank_{H'}(X**, Y)
  std::size_t cross_rank_star = 0; // rank Adj_G(X*, Y)
};

// X** = the floor((|Y| - 1) / 2) smallest members of X* (so 2|X**| < |Y|).
SplitResult split_y_subgraph(const Graph& g, const VertexSet& x_star, const VertexSet& y);

struct LiftResult {
  Separation p1;  // (X ∪ A_y, B_y)
  Separation p2;  // (X ∪ B_y, A_y)
  std::size_t cutrank_x = 0;    // cutrank_G(X, Y)
  std::size_t cross_ab = 0;     // rank Adj_G(A_y, B_y)
  std::size_t cross_x_a = 0;    // rank Adj_G(X, A_y)
  std::size_t cross_x_b = 0;    // rank Adj_G(X, B_y)
  std::size_t hprime_cutrank = 0;
  bool certificates_hold = false;  // cutrank(P_i) <= cutrank_x + hprime_cutrank
  bool chain_holds = false;        // the intermediate subadditivity steps
  std::size_t r = 0;               // least r with cutrank_x <= 70r-1, hprime <= r-1
  bool below_72r = false;
};

// a_y and b_y must partition V \ x and both be nonempty.
LiftResult lift_cut(const Graph& g, const VertexSet& x, const VertexSet& a_y, const VertexSet& b_y,
                    std::size_t hprime_cutrank);

struct BlockBound {
  std::size_t rank_m = 0;   // rank Adj_H(X**, Y)
  std::size_t rank_ab = 0;  // rank Adj_H(A ∩ X**, B ∩ Y)
  std::size_t rank_aa = 0;  // rank Adj_H(A ∩ X**, A ∩ Y)
  std::size_t rank_bb = 0;  // rank Adj_H(B ∩ X**, B ∩ Y)
  std::size_t cut_ab = 0;   // cutrank_H(A, B)
  bool holds = false;       // rank_aa + rank_bb <= rank_m + rank_ab
};

// Blocks of Adj_H(xs, y) cut by the partition (a, V(H) \ a); xs and y
// partition V(H).
BlockBound split_block_ranks(const Graph& h, const VertexSet& xs, const VertexSet& y,
                             const VertexSet& a);

}  // namespace rlab
