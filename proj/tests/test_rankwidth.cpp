#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "rlab/errors.hpp"
#include "rlab/rankwidth.hpp"
#include "support.hpp"

using namespace rlab;

namespace {

VertexSet S(std::size_t n, std::initializer_list<std::size_t> m) { return VertexSet::from_members(n, m); }

DecompositionTree caterpillar(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return rankwidth_upper_linear(gen_edgeless(n), order).tree;
}

}  // namespace

TEST_CASE("width_of examples") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(width_of(gen_clique(n), caterpillar(n)) == 1);
  CHECK(width_of(gen_edgeless(6), caterpillar(6)) == 0);
  CHECK(width_of(gen_path(4), caterpillar(4)) == 1);
  CHECK(width_of(gen_edgeless(1), caterpillar(1)) == 0);
}

TEST_CASE("invalid trees are rejected") {
  DecompositionTree t;
  const auto a = t.add_leaf(0);
  const auto b = t.add_leaf(0);
  t.add_edge(a, b);
  CHECK_THROWS_AS(width_of(gen_edgeless(2), t), InputError);

  DecompositionTree star;
  const auto c = star.add_internal();
  for (std::size_t v = 0; v < 4; ++v) star.add_edge(c, star.add_leaf(v));
  CHECK_THROWS_AS(star.validate(4), InputError);

  DecompositionTree cyc;
  const auto x = cyc.add_internal(), y = cyc.add_internal(), z = cyc.add_internal();
  cyc.add_edge(x, y);
  cyc.add_edge(y, z);
  cyc.add_edge(z, x);
  cyc.add_edge(x, cyc.add_leaf(0));
  cyc.add_edge(y, cyc.add_leaf(1));
  cyc.add_edge(z, cyc.add_leaf(2));
  CHECK_THROWS_AS(cyc.validate(3), InputError);

  CHECK_THROWS_AS(caterpillar(3).validate(4), InputError);
}

TEST_CASE("rankwidth_exact examples") {
  for (std::size_t n = 2; n <= 10; ++n) CHECK(rankwidth_exact(gen_clique(n)).value == 1);
  CHECK(rankwidth_exact(gen_edgeless(1)).value == 0);
  CHECK(rankwidth_exact(gen_edgeless(1)).tree.node_count() == 1);
  CHECK(rankwidth_exact(Graph{}).value == 0);
  CHECK(rankwidth_exact(Graph{}).tree.node_count() == 0);
  CHECK(rankwidth_exact(gen_clique(2)).tree.edges().size() == 1);
  CHECK(rankwidth_exact(gen_cycle(5)).value == 2);
  CHECK(oracle::brute_rankwidth(gen_cycle(5)) == 2);
  CHECK(rankwidth_exact(gen_edgeless(9)).value == 0);
  CHECK(rankwidth_exact(gen_path(9)).value == 1);
}

TEST_CASE("rankwidth_exact refuses past the budget") {
  CHECK_THROWS_AS(rankwidth_exact(gen_cycle(17)), BudgetExceeded);
  CHECK_THROWS_AS(rankwidth_exact(gen_cycle(9), SearchOptions{8, false, 1}), BudgetExceeded);
  CHECK(rankwidth_exact(gen_cycle(9), SearchOptions{8, true, 1}).value == 2);
}

TEST_CASE("DP equals brute force over trees for every labeled graph with n <= 6") {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto trees = oracle::cubic_tree_sides(n);
    const std::uint64_t codes = std::uint64_t{1} << (n * (n ? n - 1 : 0) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = support::graph_from_code(n, code);
      const auto res = rankwidth_exact(g);
      REQUIRE(res.value == oracle::brute_rankwidth(g, trees));
      REQUIRE(width_of(g, res.tree) == res.value);
      ++checked;
    }
  }
  CHECK(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("DP equals brute force on 50 seeded graphs with n = 7") {
  CounterRng rng(seed_key(41));
  const auto trees = oracle::cubic_tree_sides(7);
  CHECK(trees.size() == 945);
  for (int t = 0; t < 50; ++t) {
    const Graph g = gen_gnp(7, rng.uniform(), rng.next());
    REQUIRE(rankwidth_exact(g).value == oracle::brute_rankwidth(g, trees));
  }
}

TEST_CASE("witness tree is valid and attains the value") {
  CounterRng rng(seed_key(42));
  for (int t = 0; t < 100; ++t) {
    const Graph g = support::random_graph(rng, 1, 11);
    const auto res = rankwidth_exact(g);
    res.tree.validate(g.n());
    REQUIRE(width_of(g, res.tree) == res.value);
    for (std::size_t v = 0; v < res.tree.node_count(); ++v) REQUIRE(res.tree.neighbors(v).size() <= 3);
  }
}

TEST_CASE("heuristic examples and upper bound") {
  CHECK(rankwidth_upper_linear(gen_clique(8)).value == 1);
  CHECK(rankwidth_upper_linear(gen_edgeless(8)).value == 0);
  CHECK(rankwidth_upper_linear(gen_edgeless(1)).value == 0);
  CHECK(rankwidth_upper_linear(Graph{}).value == 0);
  CHECK_THROWS_AS(rankwidth_upper_linear(gen_path(3), std::vector<std::size_t>{0, 1}), InputError);
  CHECK_THROWS_AS(rankwidth_upper_linear(gen_path(3), std::vector<std::size_t>{0, 1, 1}), InputError);
  CounterRng rng(seed_key(43));
  for (int t = 0; t < 100; ++t) {
    const Graph g = support::random_graph(rng, 1, 10);
    const auto h = rankwidth_upper_linear(g);
    h.tree.validate(g.n());
    REQUIRE(h.value == width_of(g, h.tree));
    REQUIRE(h.value >= rankwidth_exact(g).value);
  }
  // Works far past the exact budget.
  const Graph big = gen_gnp(200, 0.1, 5);
  const auto hb = rankwidth_upper_linear(big);
  CHECK(hb.value == width_of(big, hb.tree));
}

TEST_CASE("lower bounds from balanced cuts") {
  CounterRng rng(seed_key(44));
  for (int t = 0; t < 60; ++t) {
    const Graph g = support::random_graph(rng, 1, 9);
    const std::size_t w = rankwidth_exact(g).value;
    REQUIRE(min_bal_cutrank(g).value <= w);
    REQUIRE(max_min_bal_cutrank_over_induced(g).value <= w);
  }
}

TEST_CASE("monotone under induced subgraphs") {
  CounterRng rng(seed_key(45));
  for (int t = 0; t < 100; ++t) {
    const Graph g = support::random_graph(rng, 1, 11);
    VertexSet s = VertexSet::from_mask(g.n(), support::random_mask(rng, g.n()));
    const Graph h = induced_subgraph(g, s).graph;
    REQUIRE(rankwidth_exact(h).value <= rankwidth_exact(g).value);
  }
}

TEST_CASE("balanced cut examples") {
  const Graph p4 = gen_path(4);
  const auto cut = balanced_cut_from_decomposition(p4, caterpillar(4));
  CHECK(cut.separation.x == S(4, {0, 1}));
  CHECK(*cut.separation.cutrank == 1);
  const auto k6 = balanced_cut_from_decomposition(gen_clique(6), rankwidth_exact(gen_clique(6)).tree);
  CHECK(is_balanced(gen_clique(6), k6.separation.x));
  CHECK(*k6.separation.cutrank == 1);
  CHECK_THROWS_AS(balanced_cut_from_decomposition(gen_edgeless(1), caterpillar(1)), InputError);
}

TEST_CASE("balanced cut from exact witnesses") {
  CounterRng rng(seed_key(46));
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 2, 10);
    const auto res = rankwidth_exact(g);
    const auto cut = balanced_cut_from_decomposition(g, res.tree);
    REQUIRE(is_balanced(g, cut.separation.x));
    REQUIRE(cutrank(g, cut.separation.x) <= res.value);
    REQUIRE(*cut.separation.cutrank == cutrank(g, cut.separation.x));
    REQUIRE_FALSE(subset_less(cut.separation.x.complement(), cut.separation.x));
    const auto side = res.tree.side(cut.edge.first, cut.edge.second, g.n());
    REQUIRE((side == cut.separation.x || side.complement() == cut.separation.x));
  }
}

TEST_CASE("tree JSON") {
  CHECK(tree_to_json(DecompositionTree{}, 0) == "{}");
  CHECK(nlohmann::json::parse(tree_to_json(caterpillar(1), 1)) == nlohmann::json::parse(R"({"leaf":0})"));
  const auto j = nlohmann::json::parse(tree_to_json(caterpillar(4), 4));
  REQUIRE(j["children"].size() == 2);
  // Each root child holds the leaves on its side of the middle edge.
  std::vector<std::size_t> leaves[2];
  for (int c = 0; c < 2; ++c) {
    std::vector<nlohmann::json> stack{j["children"][c]};
    while (!stack.empty()) {
      auto node = stack.back();
      stack.pop_back();
      if (node.contains("leaf")) {
        leaves[c].push_back(node["leaf"].get<std::size_t>());
      } else {
        REQUIRE(node["children"].size() <= 2);
        for (auto& ch : node["children"]) stack.push_back(ch);
      }
    }
    std::sort(leaves[c].begin(), leaves[c].end());
  }
  CHECK(leaves[0] == std::vector<std::size_t>{0, 1});
  CHECK(leaves[1] == std::vector<std::size_t>{2, 3});
}

TEST_CASE("exact DP is independent of the thread count") {
  CounterRng rng(seed_key(47));
  for (int t = 0; t < 10; ++t) {
    const Graph g = gen_gnp(11, rng.uniform(), rng.next());
    const auto a = rankwidth_exact(g, SearchOptions{0, false, 1});
    const auto b = rankwidth_exact(g, SearchOptions{0, false, 4});
    REQUIRE(a.value == b.value);
    REQUIRE(a.tree.edges() == b.tree.edges());
    REQUIRE(tree_to_json(a.tree, g.n()) == tree_to_json(b.tree, g.n()));
  }
}
