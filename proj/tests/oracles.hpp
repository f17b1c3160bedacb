#pragma once

// Slow, independent reference implementations. Nothing here calls the
// library's rank, cut or search code; only Graph accessors are used.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rlab/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

// Textbook elimination on unpacked 0/1 entries.
inline std::size_t rank(Dense m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
  Dense out(a.size(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < cols; ++j) out[i][j] ^= b[k][j];
  return out;
}

inline std::vector<std::size_t> bits(std::uint64_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if ((m >> i) & 1U) out.push_back(i);
  return out;
}

inline std::size_t cross(const rlab::Graph& g, std::uint64_t a, std::uint64_t b) {
  Dense m;
  for (std::size_t u : bits(a)) {
    std::vector<int> row;
    for (std::size_t v : bits(b)) row.push_back(g.has_edge(u, v) ? 1 : 0);
    m.push_back(row);
  }
  return rank(m);
}

inline std::uint64_t all(std::size_t n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

inline std::size_t cutrank(const rlab::Graph& g, std::uint64_t x) {
  return cross(g, x, all(g.n()) & ~x);
}

inline bool balanced(std::size_t n, std::size_t k) { return 3 * k <= 2 * n && 3 * (n - k) <= 2 * n; }

inline std::size_t min_bal(const rlab::Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = SIZE_MAX;
  for (std::uint64_t x = 0; x <= all(n); ++x) {
    if (balanced(n, static_cast<std::size_t>(__builtin_popcountll(x)))) best = std::min(best, cutrank(g, x));
    if (x == all(n)) break;
  }
  return best == SIZE_MAX ? 0 : best;
}

inline rlab::Graph induced(const rlab::Graph& g, std::uint64_t s) {
  const auto vs = bits(s);
  rlab::GraphBuilder b(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::size_t max_min_bal(const rlab::Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s <= all(g.n()); ++s) {
    best = std::max(best, min_bal(induced(g, s)));
    if (s == all(g.n())) break;
  }
  return best;
}

// Max over nonempty S with 2|S| <= n of cutrank(S)/|S| as (num, den).
inline std::pair<std::size_t, std::size_t> rank_expansion(const rlab::Graph& g) {
  std::size_t bn = 0, bd = 1;
  const std::size_t n = g.n();
  for (std::uint64_t s = 1; s <= all(n); ++s) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (2 * k <= n) {
      const std::size_t c = cutrank(g, s);
      if (c * bd > bn * k) {
        bn = c;
        bd = k;
      }
    }
    if (s == all(n)) break;
  }
  const std::size_t d = std::__gcd(bn, bd);
  return {bn / (d ? d : 1), bd / (d ? d : 1)};
}

// Unrooted cubic trees with leaves 0..n-1 built by inserting each new leaf
// into every edge; trees carry edges only, internal nodes numbered from n.
using Edges = std::vector<std::pair<int, int>>;

inline void for_each_cubic_tree(std::size_t n, const std::function<void(const Edges&)>& fn) {
  if (n == 0) return;
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::function<void(Edges&, std::size_t, int)> grow = [&](Edges& e, std::size_t leaf, int next) {
    if (leaf == n) {
      fn(e);
      return;
    }
    const std::size_t count = e.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto [a, b] = e[i];
      const int mid = next;
      e[i] = {a, mid};
      e.push_back({mid, b});
      e.push_back({mid, static_cast<int>(leaf)});
      grow(e, leaf + 1, next + 1);
      e.pop_back();
      e.pop_back();
      e[i] = {a, b};
    }
  };
  // Star on leaves 0, 1, 2 around internal node n.
  Edges e{{0, static_cast<int>(n)}, {1, static_cast<int>(n)}, {2, static_cast<int>(n)}};
  grow(e, 3, static_cast<int>(n) + 1);
}

// Leaves (< n) reachable from `to` without crossing edge {from, to}.
inline std::uint64_t side(const Edges& e, std::size_t n, int from, int to) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : e) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::uint64_t out = 0;
  std::vector<std::pair<int, int>> stack{{to, from}};
  while (!stack.empty()) {
    auto [u, p] = stack.back();
    stack.pop_back();
    if (u < static_cast<int>(n)) out |= 1ULL << u;
    for (int v : adj[u])
      if (v != p) stack.push_back({v, u});
  }
  return out;
}

// For each cubic tree on n leaves, the leaf set on one side of every edge.
inline std::vector<std::vector<std::uint64_t>> cubic_tree_sides(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_cubic_tree(n, [&](const Edges& e) {
    std::vector<std::uint64_t> sides;
    for (auto [a, b] : e) sides.push_back(side(e, n, a, b));
    out.push_back(sides);
  });
  return out;
}

inline std::size_t brute_rankwidth(const rlab::Graph& g,
                                   const std::vector<std::vector<std::uint64_t>>& trees) {
  const std::size_t n = g.n();
  if (n <= 1) return 0;
  std::vector<std::size_t> cut(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < cut.size(); ++x) cut[x] = cutrank(g, x);
  std::size_t best = SIZE_MAX;
  for (const auto& sides : trees) {
    std::size_t w = 0;
    for (std::uint64_t s : sides) w = std::max(w, cut[s]);
    best = std::min(best, w);
  }
  return best;
}

inline std::size_t brute_rankwidth(const rlab::Graph& g) {
  return brute_rankwidth(g, cubic_tree_sides(g.n()));
}

// Largest S ⊆ positions 0..m-1 such that every subset of S appears as a
// trace of some family member.
inline std::size_t vc_dimension(const std::vector<std::uint64_t>& family, std::uint64_t universe) {
  std::size_t best = 0;
  for (std::uint64_t s = universe;; s = (s - 1) & universe) {
    std::set<std::uint64_t> traces;
    for (std::uint64_t f : family) traces.insert(f & s);
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (!family.empty() && traces.size() == (1ULL << k)) best = std::max(best, k);
    if (s == 0) break;
  }
  return best;
}

// graph6 decoder written from the format description (short and 18-bit sizes).
inline rlab::Graph decode_graph6(const std::string& s) {
  std::size_t pos = 0;
  std::size_t n = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else {
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  }
  rlab::GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = s[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

// Well-behavedness straight from the definition, A over all masks of X.
inline bool well_behaved(const rlab::Graph& g, std::uint64_t x, std::size_t r, std::size_t s,
                         std::uint64_t en, std::uint64_t ed) {
  const std::uint64_t y = all(g.n()) & ~x;
  for (std::uint64_t a = 0; a <= all(g.n()); ++a) {
    if ((a & ~x) == 0) {
      const std::uint64_t b = x & ~a;
      const bool premise = cross(g, a, y) <= 70 * r && static_cast<std::size_t>(__builtin_popcountll(a)) <= 6 * s;
      if (premise && ed * cutrank(g, b) < 420 * r * en) return false;
    }
    if (a == all(g.n())) break;
  }
  return true;
}

}  // namespace oracle
