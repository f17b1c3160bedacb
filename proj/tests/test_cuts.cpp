#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rlab/cuts.hpp"
#include "rlab/errors.hpp"
#include "support.hpp"

using namespace rlab;

namespace {
VertexSet S(std::size_t n, std::initializer_list<std::size_t> m) { return VertexSet::from_members(n, m); }
}  // namespace

TEST_CASE("cutrank examples") {
  const Graph k6 = gen_clique(6);
  CHECK(cutrank(k6, S(6, {0, 3})) == 1);
  CHECK(cutrank(k6, VertexSet(6)) == 0);
  CHECK(cutrank(k6, VertexSet::full(6)) == 0);
  CHECK(cutrank(gen_cycle(5), S(5, {0, 1})) == 2);
}

TEST_CASE("cutrank matches the oracle and is symmetric, masks and wide graphs") {
  CounterRng rng(seed_key(31));
  for (int t = 0; t < 400; ++t) {
    const Graph g = support::random_graph(rng, 0, 40);
    const std::uint64_t x = support::random_mask(rng, g.n());
    const VertexSet xs = VertexSet::from_mask(g.n(), x);
    REQUIRE(cutrank(g, xs) == oracle::cutrank(g, x));
    REQUIRE(cutrank(g, xs) == cutrank(g, xs.complement()));
  }
  // n > 64 takes the multiword path.
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = rng.between(65, 150);
    const Graph g = gen_gnp(n, rng.uniform(), rng.next());
    VertexSet x(n);
    for (std::size_t v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) x.insert(v);
    const BitMatrix m = biadjacency(g, x, x.complement());
    REQUIRE(cutrank(g, x) == oracle::rank(support::to_dense(m)));
    REQUIRE(cutrank(g, x) == cutrank(g, x.complement()));
  }
}

TEST_CASE("balance predicate") {
  CHECK(is_balanced(6, 3));
  CHECK_FALSE(is_balanced(6, 1));
  CHECK(is_balanced(5, 2));
  CHECK(is_balanced(5, 3));
  CHECK_FALSE(is_balanced(5, 1));
  CHECK_FALSE(is_balanced(1, 0));
  CHECK_FALSE(is_balanced(1, 1));
  CHECK(is_balanced(2, 1));
  for (std::size_t n = 0; n < 40; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      REQUIRE(is_balanced(n, k) == oracle::balanced(n, k));
      REQUIRE(is_balanced(n, k) == (k >= balanced_min_size(n) && k <= balanced_max_size(n)));
    }
}

TEST_CASE("min_bal_cutrank examples") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(min_bal_cutrank(gen_clique(n)).value == 1);
  CHECK(min_bal_cutrank(gen_edgeless(7)).value == 0);
  const auto c5 = min_bal_cutrank(gen_cycle(5));
  CHECK(c5.value == 2);
  CHECK(*c5.witness.cutrank == 2);
  CHECK(c5.witness.x == S(5, {0, 1}));
  CHECK(min_bal_cutrank(gen_edgeless(1)).value == 0);
  CHECK(min_bal_cutrank(gen_edgeless(1)).witness.x.empty());
  CHECK(min_bal_cutrank(Graph{}).value == 0);
}

TEST_CASE("min_bal_cutrank matches the oracle with a least witness") {
  CounterRng rng(seed_key(32));
  for (int t = 0; t < 300; ++t) {
    const Graph g = support::random_graph(rng, 0, 11);
    const auto res = min_bal_cutrank(g);
    REQUIRE(res.value == oracle::min_bal(g));
    if (g.n() < 2) continue;
    const std::size_t n = g.n();
    REQUIRE(is_balanced(g, res.witness.x));
    REQUIRE(cutrank(g, res.witness.x) == res.value);
    REQUIRE_FALSE(subset_less(res.witness.x.complement(), res.witness.x));
    // No minimizer (either side) precedes the witness.
    for (std::uint64_t x = 0; x <= oracle::all(n); ++x) {
      if (oracle::balanced(n, static_cast<std::size_t>(std::popcount(x))) && oracle::cutrank(g, x) == res.value)
        REQUIRE_FALSE(subset_less(VertexSet::from_mask(n, x), res.witness.x));
      if (x == oracle::all(n)) break;
    }
  }
}

TEST_CASE("rank-0 balanced cuts are found past the enumeration budget") {
  // Disjoint cliques: a zero cut exists; n = 40 would be far too big to enumerate.
  GraphBuilder b(40);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = i + 1; j < 10; ++j) b.add_edge(10 * c + i, 10 * c + j);
  const Graph g = std::move(b).build();
  const auto res = min_bal_cutrank(g);
  CHECK(res.value == 0);
  CHECK(is_balanced(g, res.witness.x));
  CHECK(cutrank(g, res.witness.x) == 0);
  CHECK_THROWS_AS(min_bal_cutrank(gen_cycle(30)), BudgetExceeded);
  CHECK(min_bal_cutrank(gen_cycle(25), SearchOptions{0, true, 1}).value == 2);
}

TEST_CASE("min_bal_cutrank is independent of the thread count") {
  CounterRng rng(seed_key(33));
  for (int t = 0; t < 5; ++t) {
    const Graph g = gen_gnp(18, 0.3 + 0.1 * t, rng.next());
    const auto a = min_bal_cutrank(g, SearchOptions{0, false, 1});
    const auto b = min_bal_cutrank(g, SearchOptions{0, false, 4});
    CHECK(a.value == b.value);
    CHECK(a.witness.x == b.witness.x);
  }
}

TEST_CASE("rank_expansion examples") {
  CHECK(rank_expansion(gen_edgeless(6)).value == Ratio::of(0, 1));
  const auto k5 = rank_expansion(gen_clique(5));
  CHECK(k5.value == Ratio::of(1, 1));
  CHECK(k5.witness.size() == 1);
  CHECK(rank_expansion(gen_cycle(4)).value == Ratio::of(1, 1));
  CHECK_THROWS_AS(rank_expansion(Graph{}), InputError);
  CHECK(rank_expansion(gen_edgeless(1)).value == Ratio::of(0, 1));
  CHECK(Ratio::of(4, 6).to_string() == "2/3");
}

TEST_CASE("rank_expansion matches the oracle") {
  CounterRng rng(seed_key(34));
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 1, 10);
    const auto res = rank_expansion(g);
    const auto [num, den] = oracle::rank_expansion(g);
    REQUIRE(res.value == Ratio::of(num, den));
    if (g.n() >= 2) {
      REQUIRE(2 * res.witness.size() <= g.n());
      REQUIRE(Ratio::of(cutrank(g, res.witness), res.witness.size()) == res.value);
    }
  }
}

TEST_CASE("neighborhood class examples") {
  const auto k = neighborhood_classes(gen_clique(5), S(5, {0, 1}));
  CHECK(k.count() == 1);
  const auto e = neighborhood_classes(gen_edgeless(5), S(5, {0, 1}));
  CHECK(e.count() == 1);
  CHECK(e.signatures[0].empty());
  CHECK(e.nonzero_count() == 0);
  const auto p = neighborhood_classes(gen_path(4), S(4, {1, 2}));
  CHECK(p.count() == 2);
  CHECK(p.classes[0] == S(4, {0}));
  CHECK(p.signatures[0] == S(4, {1}));
  CHECK(p.signatures[1] == S(4, {2}));
}

TEST_CASE("neighborhood classes partition Y by signature") {
  CounterRng rng(seed_key(35));
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 0, 16);
    const VertexSet x = VertexSet::from_mask(g.n(), support::random_mask(rng, g.n()));
    const auto nc = neighborhood_classes(g, x);
    VertexSet cover(g.n());
    for (std::size_t i = 0; i < nc.count(); ++i) {
      REQUIRE_FALSE(nc.classes[i].empty());
      REQUIRE_FALSE(cover.intersects(nc.classes[i]));
      cover |= nc.classes[i];
      for (std::size_t y : nc.classes[i].members()) REQUIRE((g.neighbors(y) & x) == nc.signatures[i]);
      for (std::size_t j = 0; j < i; ++j) REQUIRE_FALSE(nc.signatures[i] == nc.signatures[j]);
    }
    REQUIRE(cover == x.complement());
    const std::size_t c = cutrank(g, x);
    REQUIRE(nc.count() <= (std::size_t{1} << c));
    REQUIRE(c <= nc.nonzero_count());
  }
}

TEST_CASE("vc_dimension examples and oracle") {
  const auto single = neighborhood_classes(gen_clique(4), S(4, {0, 1}));
  CHECK(vc_dimension(single) == 0);
  // X = {0, 1}; Y traces: {}, {0}, {1}, {0, 1}.
  GraphBuilder b(6);
  b.add_edge(3, 0).add_edge(4, 1).add_edge(5, 0).add_edge(5, 1);
  const Graph g = std::move(b).build();
  CHECK(vc_dimension(neighborhood_classes(g, S(6, {0, 1}))) == 2);
  CHECK(vc_dimension(neighborhood_classes(g, VertexSet::full(6))) == 0);

  CounterRng rng(seed_key(36));
  for (int t = 0; t < 150; ++t) {
    const Graph h = support::random_graph(rng, 1, 14);
    const std::uint64_t xm = support::random_mask(rng, h.n());
    const auto nc = neighborhood_classes(h, VertexSet::from_mask(h.n(), xm));
    std::vector<std::uint64_t> fam;
    for (const auto& s : nc.signatures) fam.push_back(s.mask());
    REQUIRE(vc_dimension(nc) == oracle::vc_dimension(fam, xm));
  }
}

TEST_CASE("Sauer-Shelah bound") {
  CHECK(sauer_shelah_bound(7, 0) == 1);
  CHECK(sauer_shelah_bound(9, 9) == 512);
  CHECK(sauer_shelah_bound(10, 2) == 56);
  CHECK(sauer_shelah_bound(0, 0) == 1);
  CHECK(sauer_shelah_bound(200, 200) == (BigInt(1) << 200));
  CHECK_THROWS_AS(sauer_shelah_bound(3, 4), InputError);
}

TEST_CASE("compression examples") {
  const VertexSet k = compress_representatives(gen_clique(6), S(6, {0, 1, 2}));
  CHECK(k.size() == 1);
  CHECK(compress_representatives(gen_edgeless(6), S(6, {0, 1, 2})).size() == 1);
  const VertexSet p = compress_representatives(gen_path(4), S(4, {0, 1}));
  CHECK(p == S(4, {0, 1}));
  CHECK(cross_rank(gen_path(4), p, S(4, {2, 3})) == 1);
  CHECK(compress_representatives(gen_path(4), VertexSet(4)).empty());
}

TEST_CASE("minimal row set examples") {
  CHECK(minimal_row_set(gen_clique(6), S(6, {0, 1, 2})).size() == 1);
  CHECK(minimal_row_set(gen_edgeless(6), S(6, {0, 1, 2})).empty());
}

TEST_CASE("compression keeps cutrank, the row set keeps the class count") {
  CounterRng rng(seed_key(37));
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 0, 20);
    const VertexSet x = VertexSet::from_mask(g.n(), support::random_mask(rng, g.n()));
    const VertexSet y = x.complement();
    const VertexSet xs = compress_representatives(g, x);
    REQUIRE(xs.is_subset_of(x));
    REQUIRE(cross_rank(g, xs, y) == cutrank(g, x));
    for (std::size_t v : x.members()) {
      bool found = false;
      for (std::size_t w : xs.members()) found = found || (g.neighbors(v) & y) == (g.neighbors(w) & y);
      REQUIRE(found);
    }
    const VertexSet xp = minimal_row_set(g, x);
    REQUIRE(xp.is_subset_of(x));
    REQUIRE(xp.size() == cutrank(g, x));
    REQUIRE(neighborhood_classes(g, xp, y).count() == neighborhood_classes(g, x, y).count());
  }
}

TEST_CASE("max min-bal-cutrank over induced subgraphs") {
  CHECK(max_min_bal_cutrank_over_induced(gen_clique(7)).value == 1);
  CHECK(max_min_bal_cutrank_over_induced(gen_edgeless(7)).value == 0);
  const auto c5 = max_min_bal_cutrank_over_induced(gen_cycle(5));
  CHECK(c5.value == 2);
  CHECK(c5.witness == VertexSet::full(5));
  CHECK_THROWS_AS(max_min_bal_cutrank_over_induced(gen_clique(17)), BudgetExceeded);

  CounterRng rng(seed_key(38));
  for (int t = 0; t < 30; ++t) {
    const Graph g = support::random_graph(rng, 0, 8);
    const auto res = max_min_bal_cutrank_over_induced(g);
    REQUIRE(res.value == oracle::max_min_bal(g));
    REQUIRE(min_bal_cutrank(induced_subgraph(g, res.witness).graph).value == res.value);
    const auto par = max_min_bal_cutrank_over_induced(g, SearchOptions{0, false, 3});
    REQUIRE(par.value == res.value);
    REQUIRE(par.witness == res.witness);
  }
}

TEST_CASE("complement changes cutrank by at most one") {
  CounterRng rng(seed_key(39));
  for (int t = 0; t < 1000; ++t) {
    const Graph g = support::random_graph(rng, 0, 20);
    const Graph h = complement(g);
    const VertexSet x = VertexSet::from_mask(g.n(), support::random_mask(rng, g.n()));
    const long d = static_cast<long>(cutrank(g, x)) - static_cast<long>(cutrank(h, x));
    REQUIRE(d <= 1);
    REQUIRE(d >= -1);
  }
}

TEST_CASE("parameter record JSON") {
  const std::string s = parameter_record_json("cutrank", "2", S(5, {0, 1}), 5, 0.0);
  const auto j = nlohmann::json::parse(s);
  CHECK(j["parameter"] == "cutrank");
  CHECK(j["value"] == 2);
  CHECK(j["witness_bitset_hex"] == "0x3");
  CHECK(j["n"] == 5);
  CHECK(j.contains("elapsed_ms"));
}
