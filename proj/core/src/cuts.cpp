#include "rlab/cuts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "json.hpp"

#include "parallel.hpp"
#include "rlab/errors.hpp"

namespace rlab {
namespace {

constexpr std::size_t kMaskCap = 63;

std::size_t rank_rows_from(const Graph& g, const VertexSet& rows, const VertexSet& cols) {
  XorBasis basis(cols.words().size());
  std::vector<VertexSet::Word> buf(cols.words().size());
  std::size_t r = 0;
  for (std::size_t v : rows.members()) {
    const auto& nb = g.neighbors(v).words();
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = nb[i] & cols.words()[i];
    if (basis.insert(buf)) ++r;
  }
  return r;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.n());
    std::vector<std::size_t> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (std::size_t v : g.neighbors(u).members()) {
        if (!seen.contains(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Lexicographically least rank-0 balanced side, if any: the smallest
// feasible size, then components taken greedily by their least vertex.
std::optional<VertexSet> zero_rank_balanced_side(const Graph& g) {
  const std::size_t n = g.n();
  const std::size_t lo = balanced_min_size(n);
  const std::size_t hi = balanced_max_size(n);
  const auto comps = connected_components(g);
  if (comps.size() < 2) return std::nullopt;
  const std::size_t m = comps.size();
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = comps[i].size();

  // reach[i][t]: some subset of components i..m-1 has total size t.
  std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n + 1, 0));
  reach[m][0] = 1;
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t t = 0; t <= n; ++t) {
      reach[i][t] = reach[i + 1][t] || (t >= sizes[i] && reach[i + 1][t - sizes[i]]);
    }
  }
  std::size_t target = lo;
  while (target <= hi && !reach[0][target]) ++target;
  if (target > hi) return std::nullopt;

  VertexSet side(n);
  std::size_t rem = target;
  for (std::size_t i = 0; i < m; ++i) {
    if (sizes[i] <= rem && reach[i + 1][rem - sizes[i]]) {
      side |= comps[i];
      rem -= sizes[i];
    }
  }
  return side;
}

struct Best {
  bool set = false;
  std::size_t value = 0;
  std::uint64_t witness = 0;
};

}  // namespace

void enforce_budget(const char* routine, std::size_t n, const SearchOptions& opts,
                    std::size_t default_budget, std::size_t hard_cap) {
  const std::size_t budget = opts.budget ? opts.budget : default_budget;
  if (n > hard_cap) throw BudgetExceeded(routine, n, hard_cap);
  if (n > budget && !opts.force) throw BudgetExceeded(routine, n, budget);
}

std::size_t cutrank(const Graph& g, const VertexSet& x) {
  if (g.fits_mask()) return cutrank_mask(g, x.mask());
  const VertexSet y = x.complement();
  return x.size() <= y.size() ? rank_rows_from(g, x, y) : rank_rows_from(g, y, x);
}

std::size_t cutrank_mask(const Graph& g, std::uint64_t x) {
  const std::uint64_t y = full_mask(g.n()) & ~x;
  return std::popcount(x) <= std::popcount(y) ? cross_rank_mask(g, x, y)
                                               : cross_rank_mask(g, y, x);
}

std::size_t cross_rank(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InputError("cross_rank: sets overlap");
  if (g.fits_mask()) return cross_rank_mask(g, a.mask(), b.mask());
  return a.size() <= b.size() ? rank_rows_from(g, a, b) : rank_rows_from(g, b, a);
}

std::size_t cross_rank_mask(const Graph& g, std::uint64_t a, std::uint64_t b) {
  std::uint64_t rows[64];
  std::size_t k = 0;
  const std::uint64_t* adj = g.neighbor_masks();
  while (a) {
    const int v = std::countr_zero(a);
    a &= a - 1;
    if (const std::uint64_t r = adj[v] & b) rows[k++] = r;
  }
  return rank_of_words(rows, k);
}

Separation make_separation(const Graph& g, VertexSet x) {
  Separation s{std::move(x), std::nullopt};
  s.cutrank = cutrank(g, s.x);
  return s;
}

bool is_balanced(std::size_t n, std::size_t x_size, const Balance& b) {
  const std::uint64_t nn = n;
  const auto ok = [&](std::uint64_t side) {
    return b.alpha_den * side >= b.alpha_num * nn && b.beta_den * side <= b.beta_num * nn;
  };
  return x_size <= n && ok(x_size) && ok(n - x_size);
}

bool is_balanced(const Graph& g, const VertexSet& x, const Balance& b) {
  return is_balanced(g.n(), x.size(), b);
}

std::size_t balanced_min_size(std::size_t n) { return (n + 2) / 3; }
std::size_t balanced_max_size(std::size_t n) { return 2 * n / 3; }

MinBalResult min_bal_cutrank(const Graph& g, const SearchOptions& opts) {
  const std::size_t n = g.n();
  if (n <= 1) return {0, Separation{VertexSet(n), 0}};
  if (auto side = zero_rank_balanced_side(g)) return {0, Separation{std::move(*side), 0}};
  enforce_budget("min_bal_cutrank", n, opts, kMinBalBudget, kMaskCap);

  const std::uint64_t full = full_mask(n);
  const std::size_t lo = balanced_min_size(n);
  const std::size_t hi = balanced_max_size(n);
  // X ranges over sides containing vertex 0; the witness is the smaller of
  // X and its complement under subset_less.
  const auto fold = [&](Best& best, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t m = begin; m < end; ++m) {
      const std::uint64_t x = (m << 1) | 1U;
      const auto size = static_cast<std::size_t>(std::popcount(x));
      if (size < lo || size > hi) continue;
      const std::size_t r = cutrank_mask(g, x);
      const std::uint64_t y = full & ~x;
      const std::uint64_t w = subset_less(y, x) ? y : x;
      if (!best.set || r < best.value || (r == best.value && subset_less(w, best.witness))) {
        best = {true, r, w};
      }
    }
  };
  const auto merge = [](Best& acc, const Best& part) {
    if (!part.set) return;
    if (!acc.set || part.value < acc.value ||
        (part.value == acc.value && subset_less(part.witness, acc.witness))) {
      acc = part;
    }
  };
  const Best best = detail::parallel_reduce(0, std::uint64_t{1} << (n - 1), opts.threads,
                                            Best{}, fold, merge);
  return {best.value, Separation{VertexSet::from_mask(n, best.witness), best.value}};
}

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InputError("Ratio: zero denominator");
  const std::uint64_t d = std::gcd(num, den);
  return d == 0 ? Ratio{0, 1} : Ratio{num / d, den / d};
}

std::string Ratio::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

RankExpansionResult rank_expansion(const Graph& g, const SearchOptions& opts) {
  const std::size_t n = g.n();
  if (n == 0) throw InputError("rank_expansion: empty graph");
  if (n == 1) return {Ratio{0, 1}, VertexSet(1)};
  enforce_budget("rank_expansion", n, opts, kRankExpansionBudget, kMaskCap);

  struct Acc {
    bool set = false;
    Ratio value;
    std::uint64_t witness = 0;
  };
  const auto better = [](const Ratio& v, std::uint64_t w, const Acc& acc) {
    return !acc.set || acc.value < v || (v == acc.value && subset_less(w, acc.witness));
  };
  const auto fold = [&](Acc& acc, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = std::max<std::uint64_t>(begin, 1); s < end; ++s) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (2 * size > n) continue;
      const Ratio v = Ratio::of(cutrank_mask(g, s), size);
      if (better(v, s, acc)) acc = {true, v, s};
    }
  };
  const auto merge = [&](Acc& acc, const Acc& part) {
    if (part.set && better(part.value, part.witness, acc)) acc = part;
  };
  const Acc best =
      detail::parallel_reduce(0, std::uint64_t{1} << n, opts.threads, Acc{}, fold, merge);
  return {best.value, VertexSet::from_mask(n, best.witness)};
}

std::size_t NeighborhoodClasses::nonzero_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      signatures.begin(), signatures.end(), [](const VertexSet& s) { return !s.empty(); }));
}

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& x) {
  return neighborhood_classes(g, x, x.complement());
}

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& x,
                                         const VertexSet& y) {
  if (x.intersects(y)) throw InputError("neighborhood_classes: X and Y overlap");
  NeighborhoodClasses out{x, y, {}, {}};
  std::map<std::vector<VertexSet::Word>, std::size_t> index;
  for (std::size_t v : y.members()) {
    VertexSet sig = g.neighbors(v) & x;
    auto [it, inserted] = index.try_emplace(sig.words(), out.classes.size());
    if (inserted) {
      out.classes.emplace_back(g.n());
      out.signatures.push_back(std::move(sig));
    }
    out.classes[it->second].insert(v);
  }
  return out;
}

std::size_t vc_dimension(const NeighborhoodClasses& classes, const SearchOptions& opts) {
  const auto xs = classes.x.members();
  const std::size_t k = xs.size();
  enforce_budget("vc_dimension", k, opts, kVcBudget, kMaskCap);

  // Signatures as masks over positions of X.
  std::vector<std::uint64_t> family;
  for (const auto& sig : classes.signatures) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (sig.contains(xs[i])) m |= std::uint64_t{1} << i;
    }
    family.push_back(m);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  std::size_t d = 0;
  std::vector<std::uint64_t> traces;
  for (std::size_t s = 1; s <= k && (std::uint64_t{1} << s) <= family.size(); ++s) {
    bool any = false;
    // Gosper's hack over s-subsets of [0, k).
    for (std::uint64_t set = (std::uint64_t{1} << s) - 1; set < (std::uint64_t{1} << k);) {
      traces.clear();
      for (std::uint64_t f : family) traces.push_back(f & set);
      std::sort(traces.begin(), traces.end());
      const auto distinct = static_cast<std::size_t>(
          std::unique(traces.begin(), traces.end()) - traces.begin());
      if (distinct == (std::size_t{1} << s)) {
        any = true;
        break;
      }
      const std::uint64_t c = set & (~set + 1);
      const std::uint64_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
    if (!any) break;
    d = s;
  }
  return d;
}

BigInt sauer_shelah_bound(std::size_t x_size, std::size_t d) {
  if (d > x_size) {
    throw InputError("sauer_shelah_bound: d = " + std::to_string(d) + " exceeds |X| = " +
                     std::to_string(x_size));
  }
  BigInt sum = 0;
  BigInt binom = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    sum += binom;
    binom = binom * (x_size - i) / (i + 1);
  }
  return sum;
}

VertexSet compress_representatives(const Graph& g, const VertexSet& x) {
  const VertexSet y = x.complement();
  VertexSet out(g.n());
  std::map<std::vector<VertexSet::Word>, std::size_t> seen;
  for (std::size_t v : x.members()) {
    if (seen.try_emplace((g.neighbors(v) & y).words(), v).second) out.insert(v);
  }
  return out;
}

VertexSet minimal_row_set(const Graph& g, const VertexSet& x) {
  const auto rows = x.members();
  const BitMatrix m = biadjacency(g, x, x.complement());
  VertexSet out(g.n());
  for (std::size_t i : row_basis(m)) out.insert(rows[i]);
  return out;
}

MaxMinBalResult max_min_bal_cutrank_over_induced(const Graph& g, const SearchOptions& opts) {
  const std::size_t n = g.n();
  enforce_budget("max_min_bal_cutrank_over_induced", n, opts, kMaxMinBalBudget, 32);
  if (n <= 1) return {0, VertexSet(n)};

  const auto fold = [&](Best& best, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto size = static_cast<std::size_t>(std::popcount(s));
      if (size <= 1) {
        if (!best.set || (best.value == 0 && subset_less(s, best.witness))) best = {true, 0, s};
        continue;
      }
      // S can only displace the running best if its value is larger, or equal
      // with a smaller witness; stop as soon as a cut rules that out.
      const bool tie_wins = best.set && subset_less(s, best.witness);
      const auto loses = [&](std::size_t current_min) {
        if (!best.set) return false;
        return current_min < best.value || (current_min == best.value && !tie_wins);
      };
      const std::size_t lo = balanced_min_size(size);
      const std::size_t hi = balanced_max_size(size);
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t rest = s ^ low;
      std::size_t current = SIZE_MAX;
      bool lost = false;
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint64_t x = sub | low;
        const auto xs = static_cast<std::size_t>(std::popcount(x));
        if (xs >= lo && xs <= hi) {
          current = std::min(current, cross_rank_mask(g, x, s & ~x));
          if (loses(current)) {
            lost = true;
            break;
          }
        }
        if (sub == 0) break;
      }
      if (lost) continue;
      if (!best.set || current > best.value || (current == best.value && tie_wins)) {
        best = {true, current, s};
      }
    }
  };
  const auto merge = [](Best& acc, const Best& part) {
    if (!part.set) return;
    if (!acc.set || part.value > acc.value ||
        (part.value == acc.value && subset_less(part.witness, acc.witness))) {
      acc = part;
    }
  };
  const Best best =
      detail::parallel_reduce(0, std::uint64_t{1} << n, opts.threads, Best{}, fold, merge);
  return {best.value, VertexSet::from_mask(n, best.witness)};
}

std::string parameter_record_json(const std::string& parameter, const std::string& value_json,
                                  const VertexSet& witness, std::size_t n, double elapsed_ms) {
  nlohmann::ordered_json j;
  j["parameter"] = parameter;
  j["value"] = nlohmann::ordered_json::parse(value_json);
  j["witness_bitset_hex"] = witness.to_hex();
  j["n"] = n;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

}  // namespace rlab
