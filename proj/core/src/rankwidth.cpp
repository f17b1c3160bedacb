#include "rlab/rankwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>

#include "json.hpp"

#include "parallel.hpp"
#include "rlab/errors.hpp"

namespace rlab {
namespace {

// Leaf sets below each node when the tree is rooted at node 0.
struct RootedView {
  std::vector<std::size_t> parent;
  std::vector<VertexSet> below;
  std::vector<std::size_t> order;  // preorder
};

RootedView root_at_zero(const DecompositionTree& t, std::size_t n) {
  const std::size_t m = t.node_count();
  RootedView view{std::vector<std::size_t>(m, SIZE_MAX), std::vector<VertexSet>(m, VertexSet(n)),
                  {}};
  if (m == 0) return view;
  std::vector<std::size_t> stack{0};
  view.parent[0] = 0;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    view.order.push_back(u);
    for (std::size_t v : t.neighbors(u)) {
      if (v != view.parent[u] || (u == 0 && v != 0 && view.parent[v] == SIZE_MAX)) {
        if (view.parent[v] != SIZE_MAX) continue;
        view.parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const std::size_t u = *it;
    if (auto v = t.leaf_vertex(u)) view.below[u].insert(*v);
    if (u != 0) view.below[view.parent[u]] |= view.below[u];
  }
  return view;
}

// Leaves on `toward`'s side of edge {from, toward}.
VertexSet directed_side(const RootedView& view, std::size_t from, std::size_t toward) {
  if (view.parent[toward] == from && toward != 0) return view.below[toward];
  return view.below[from].complement();
}

}  // namespace

std::size_t DecompositionTree::add_leaf(std::size_t vertex) {
  adjacency_.emplace_back();
  label_.emplace_back(vertex);
  return adjacency_.size() - 1;
}

std::size_t DecompositionTree::add_internal() {
  adjacency_.emplace_back();
  label_.emplace_back(std::nullopt);
  return adjacency_.size() - 1;
}

void DecompositionTree::add_edge(std::size_t a, std::size_t b) {
  if (a >= adjacency_.size() || b >= adjacency_.size()) {
    throw InputError("DecompositionTree: edge endpoint out of range");
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  edges_.emplace_back(a, b);
}

void DecompositionTree::validate(std::size_t n) const {
  const std::size_t m = adjacency_.size();
  if (n == 0) {
    if (m != 0) throw InputError("decomposition of the empty graph must be empty");
    return;
  }
  if (m == 0) throw InputError("decomposition has no nodes");
  if (edges_.size() != m - 1) throw InputError("decomposition is not a tree (edge count)");
  for (auto [a, b] : edges_) {
    if (a == b) throw InputError("decomposition has a loop");
  }
  std::vector<char> seen(m, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != m) throw InputError("decomposition is not connected");

  std::vector<char> used(n, 0);
  std::size_t labeled = 0;
  for (std::size_t u = 0; u < m; ++u) {
    const std::size_t deg = adjacency_[u].size();
    if (deg > 3) {
      throw InputError("decomposition node " + std::to_string(u) + " has degree " +
                       std::to_string(deg) + " > 3");
    }
    const bool is_leaf = deg <= 1;
    if (label_[u]) {
      if (!is_leaf) throw InputError("labeled node " + std::to_string(u) + " is not a leaf");
      const std::size_t v = *label_[u];
      if (v >= n) throw InputError("leaf label " + std::to_string(v) + " out of range");
      if (used[v]) throw InputError("vertex " + std::to_string(v) + " labels two leaves");
      used[v] = 1;
      ++labeled;
    } else if (is_leaf) {
      throw InputError("leaf node " + std::to_string(u) + " carries no vertex");
    }
  }
  if (labeled != n) throw InputError("leaf labeling is not a bijection onto V(G)");
}

VertexSet DecompositionTree::side(std::size_t from, std::size_t toward, std::size_t n) const {
  VertexSet out(n);
  std::vector<std::size_t> stack{toward};
  std::vector<char> seen(adjacency_.size(), 0);
  seen[from] = 1;
  seen[toward] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (label_[u]) out.insert(*label_[u]);
    for (std::size_t v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return out;
}

std::size_t width_of(const Graph& g, const DecompositionTree& t) {
  t.validate(g.n());
  if (t.edges().empty()) return 0;
  const RootedView view = root_at_zero(t, g.n());
  std::size_t w = 0;
  for (std::size_t u = 1; u < t.node_count(); ++u) w = std::max(w, cutrank(g, view.below[u]));
  return w;
}

RankwidthResult rankwidth_exact(const Graph& g, const SearchOptions& opts) {
  const std::size_t n = g.n();
  enforce_budget("rankwidth_exact", n, opts, kRankwidthBudget, 30);
  RankwidthResult out;
  if (n == 0) return out;
  if (n == 1) {
    out.tree.add_leaf(0);
    return out;
  }

  const std::uint32_t full = static_cast<std::uint32_t>(full_mask(n));
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> cut(count);
  std::vector<std::uint8_t> best(count);
  std::vector<std::uint32_t> split(count, 0);

  // cutrank(S) == cutrank(V \ S): compute the half without vertex n-1.
  const std::size_t half = count / 2;
  detail::parallel_for(half, opts.threads, [&](std::size_t m) {
    const auto r = static_cast<std::uint8_t>(cutrank_mask(g, m));
    cut[m] = r;
    cut[full ^ static_cast<std::uint32_t>(m)] = r;
  });

  std::vector<std::vector<std::uint32_t>> levels(n + 1);
  for (std::uint32_t s = 1; s <= full; ++s) levels[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  for (std::uint32_t s : levels[1]) best[s] = cut[s];

  // best(S): width of the best rooted cubic tree on leaves S including the
  // edge above S. Splits are anchored on the lowest bit of S, so each
  // unordered split is visited once.
  for (std::size_t level = 2; level <= n; ++level) {
    const auto& masks = levels[level];
    detail::parallel_for(masks.size(), opts.threads, [&](std::size_t idx) {
      const std::uint32_t s = masks[idx];
      const std::uint32_t low = s & (~s + 1);
      const std::uint32_t rest = s ^ low;
      std::uint8_t best_v = 0xFF;
      std::uint32_t best_s1 = 0;
      for (std::uint32_t sub = 0;; sub = ((sub | ~rest) + 1) & rest) {
        if (sub != rest) {
          const std::uint32_t s1 = low | sub;
          const std::uint32_t s2 = s ^ s1;
          const std::uint8_t v = std::max(best[s1], best[s2]);
          if (v < best_v || (v == best_v && subset_less(s1, best_s1))) {
            best_v = v;
            best_s1 = s1;
          }
        }
        if (sub == rest) break;
      }
      best[s] = std::max(cut[s], best_v);
      split[s] = best_s1;
    });
  }
  out.value = best[full];

  std::function<std::size_t(std::uint32_t)> build = [&](std::uint32_t s) -> std::size_t {
    if (std::popcount(s) == 1) return out.tree.add_leaf(static_cast<std::size_t>(std::countr_zero(s)));
    const std::size_t node = out.tree.add_internal();
    const std::size_t a = build(split[s]);
    const std::size_t b = build(s ^ split[s]);
    out.tree.add_edge(node, a);
    out.tree.add_edge(node, b);
    return node;
  };
  const std::size_t a = build(split[full]);
  const std::size_t b = build(full ^ split[full]);
  out.tree.add_edge(a, b);
  return out;
}

RankwidthResult rankwidth_upper_linear(const Graph& g,
                                       const std::optional<std::vector<std::size_t>>& order) {
  const std::size_t n = g.n();
  std::vector<std::size_t> ord;
  if (order) {
    ord = *order;
    std::vector<char> seen(n, 0);
    if (ord.size() != n) throw InputError("vertex order must list every vertex once");
    for (std::size_t v : ord) {
      if (v >= n || seen[v]) throw InputError("vertex order must list every vertex once");
      seen[v] = 1;
    }
  } else {
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&g](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
  }

  RankwidthResult out;
  DecompositionTree& t = out.tree;
  if (n == 0) return out;
  if (n == 1) {
    t.add_leaf(ord[0]);
    return out;
  }
  if (n == 2) {
    t.add_edge(t.add_leaf(ord[0]), t.add_leaf(ord[1]));
    out.value = width_of(g, t);
    return out;
  }
  // Spine c_0 .. c_{n-3}; c_0 holds ord[0], ord[1]; c_i holds ord[i+1];
  // the last spine node also holds ord[n-1].
  const std::size_t k = n - 2;
  std::vector<std::size_t> spine(k);
  for (std::size_t i = 0; i < k; ++i) spine[i] = t.add_internal();
  for (std::size_t i = 0; i + 1 < k; ++i) t.add_edge(spine[i], spine[i + 1]);
  t.add_edge(spine[0], t.add_leaf(ord[0]));
  t.add_edge(spine[0], t.add_leaf(ord[1]));
  for (std::size_t i = 1; i < k; ++i) t.add_edge(spine[i], t.add_leaf(ord[i + 1]));
  t.add_edge(spine[k - 1], t.add_leaf(ord[n - 1]));
  out.value = width_of(g, t);
  return out;
}

DecompositionTree::Edge balanced_edge(const DecompositionTree& t, std::size_t n) {
  t.validate(n);
  if (n < 2) throw InputError("balanced_edge: needs at least two leaves");
  const RootedView view = root_at_zero(t, n);
  const auto smaller_side = [&](std::size_t from, std::size_t toward) {
    VertexSet a = directed_side(view, from, toward);
    VertexSet b = a.complement();
    return subset_less(b, a) ? b : a;
  };

  auto [u, v] = t.edges().front();
  if (directed_side(view, u, v).size() < directed_side(view, v, u).size()) std::swap(u, v);
  while (!is_balanced(n, directed_side(view, u, v).size())) {
    // The heavy side holds more than 2n/3 leaves, so v is internal.
    std::optional<std::size_t> pick_balanced;
    std::optional<std::size_t> pick_heavy;
    for (std::size_t w : t.neighbors(v)) {
      if (w == u) continue;
      const VertexSet far = directed_side(view, v, w);
      if (is_balanced(n, far.size())) {
        if (!pick_balanced ||
            subset_less(smaller_side(v, w), smaller_side(v, *pick_balanced))) {
          pick_balanced = w;
        }
      } else {
        const VertexSet cur = pick_heavy ? directed_side(view, v, *pick_heavy) : VertexSet(n);
        if (!pick_heavy || far.size() > cur.size() ||
            (far.size() == cur.size() && subset_less(far, cur))) {
          pick_heavy = w;
        }
      }
    }
    const std::size_t next = pick_balanced ? *pick_balanced : *pick_heavy;
    u = v;
    v = next;
  }
  return {u, v};
}

BalancedCut balanced_cut_from_decomposition(const Graph& g, const DecompositionTree& t) {
  const std::size_t n = g.n();
  const auto edge = balanced_edge(t, n);
  VertexSet a = t.side(edge.first, edge.second, n);
  VertexSet b = a.complement();
  VertexSet x = subset_less(b, a) ? std::move(b) : std::move(a);
  BalancedCut out{make_separation(g, std::move(x)), edge};
  return out;
}

std::string tree_to_json(const DecompositionTree& t, std::size_t n) {
  using json = nlohmann::ordered_json;
  if (t.node_count() == 0) return "{}";
  std::function<json(std::size_t, std::size_t)> node_json = [&](std::size_t parent,
                                                                std::size_t u) -> json {
    json j;
    if (auto v = t.leaf_vertex(u)) {
      j["leaf"] = *v;
      return j;
    }
    json children = json::array();
    for (std::size_t w : t.neighbors(u)) {
      if (w != parent) children.push_back(node_json(u, w));
    }
    j["children"] = std::move(children);
    return j;
  };
  if (t.node_count() == 1) return node_json(SIZE_MAX, 0).dump();
  const auto [a, b] = balanced_edge(t, n);
  json root;
  root["children"] = json::array({node_json(b, a), node_json(a, b)});
  return root.dump();
}

}  // namespace rlab
