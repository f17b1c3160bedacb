#include "rlab/tangle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"

#include "rlab/errors.hpp"

namespace rlab {
namespace {

using Mask = std::uint64_t;

Mask canonical_side(Mask x, Mask full) {
  const Mask y = full & ~x;
  return subset_less(y, x) ? y : x;
}

// sup[D] = number of sets in the family that contain D.
class SupersetCounter {
 public:
  explicit SupersetCounter(std::size_t n) : sup_(std::size_t{1} << n, 0) {}

  void add(Mask s) { visit(s, +1); }
  void remove(Mask s) { visit(s, -1); }
  bool any_superset(Mask d) const { return sup_[d] != 0; }

 private:
  void visit(Mask s, int delta) {
    for (Mask d = s;; d = (d - 1) & s) {
      sup_[d] = static_cast<std::uint32_t>(static_cast<int>(sup_[d]) + delta);
      if (d == 0) break;
    }
  }
  std::vector<std::uint32_t> sup_;
};

struct Search {
  std::size_t n;
  Mask full;
  bool standard;
  std::vector<Mask> canon;  // canonical side per separation
  std::vector<int> assign;  // -1 open, 0 canonical small, 1 complement small
  std::vector<Mask> family;
  SupersetCounter sup;
  std::vector<std::size_t> trail;
  std::uint64_t nodes = 0;

  Search(std::size_t n_, bool standard_, std::vector<Mask> canon_)
      : n(n_),
        full(full_mask(n_)),
        standard(standard_),
        canon(std::move(canon_)),
        assign(canon.size(), -1),
        sup(n_) {}

  Mask side_of(std::size_t i, int choice) const { return choice == 0 ? canon[i] : full & ~canon[i]; }

  bool feasible(Mask s) const {
    if (s == full) return false;
    if (standard && static_cast<std::size_t>(std::popcount(s)) + 1 == n) return false;
    const Mask rest = full & ~s;
    if (sup.any_superset(rest)) return false;
    for (Mask t : family) {
      if (sup.any_superset(rest & ~t)) return false;
    }
    return true;
  }

  void push(std::size_t i, int choice) {
    assign[i] = choice;
    const Mask s = side_of(i, choice);
    family.push_back(s);
    sup.add(s);
    trail.push_back(i);
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const std::size_t i = trail.back();
      trail.pop_back();
      sup.remove(family.back());
      family.pop_back();
      assign[i] = -1;
    }
  }

  bool propagate(const std::vector<std::size_t>& active) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i : active) {
        if (assign[i] != -1) continue;
        const bool f0 = feasible(side_of(i, 0));
        const bool f1 = feasible(side_of(i, 1));
        if (!f0 && !f1) return false;
        if (f0 != f1) {
          push(i, f0 ? 0 : 1);
          changed = true;
        }
      }
    }
    return true;
  }

  bool dfs(const std::vector<std::size_t>& active) {
    ++nodes;
    std::size_t pick = SIZE_MAX;
    for (std::size_t i : active) {
      if (assign[i] == -1) {
        pick = i;
        break;
      }
    }
    if (pick == SIZE_MAX) return true;
    for (int choice = 0; choice < 2; ++choice) {
      const Mask s = side_of(pick, choice);
      if (!feasible(s)) continue;
      const std::size_t mark = trail.size();
      push(pick, choice);
      if (propagate(active) && dfs(active)) return true;
      undo_to(mark);
    }
    return false;
  }

  // Solves the restriction to `active`; leaves the assignment in place on success.
  bool solve(const std::vector<std::size_t>& active) {
    undo_to(0);
    if (!propagate(active)) {
      undo_to(0);
      return false;
    }
    if (dfs(active)) return true;
    undo_to(0);
    return false;
  }
};

void require_mask_graph(const char* routine, const Graph& g, const SearchOptions& opts,
                        std::size_t default_budget) {
  enforce_budget(routine, g.n(), opts, default_budget, kTangleHardCap);
}

}  // namespace

std::vector<Separation> enumerate_low_rank_separations(const Graph& g, std::size_t k,
                                                       const SearchOptions& opts) {
  require_mask_graph("enumerate_low_rank_separations", g, opts, kTangleBudget);
  const std::size_t n = g.n();
  std::vector<Separation> out;
  if (k == 0) return out;
  if (n == 0) {
    out.push_back({VertexSet(0), 0});
    return out;
  }
  const Mask full = full_mask(n);
  const Mask half = Mask{1} << (n - 1);
  for (Mask m = 0; m < half; ++m) {
    const std::size_t r = cutrank_mask(g, m);
    if (r < k) out.push_back({VertexSet::from_mask(n, canonical_side(m, full)), r});
  }
  std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
    if (*a.cutrank != *b.cutrank) return *a.cutrank < *b.cutrank;
    return subset_less(a.x, b.x);
  });
  return out;
}

std::string to_string(TangleAxioms a) {
  return a == TangleAxioms::kStandard ? "standard" : "literal";
}

TangleAxioms parse_axioms(std::string_view text) {
  if (text == "standard") return TangleAxioms::kStandard;
  if (text == "literal") return TangleAxioms::kLiteral;
  throw InputError("unknown tangle axioms '" + std::string(text) + "' (standard|literal)");
}

std::optional<bool> TangleOracle::is_small(const VertexSet& s) const {
  const VertexSet c = s.complement();
  for (const auto& e : entries) {
    if (e.side == s) return e.side_is_small;
    if (e.side == c) return !e.side_is_small;
  }
  return std::nullopt;
}

std::vector<VertexSet> TangleOracle::small_sides() const {
  std::vector<VertexSet> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.small());
  return out;
}

std::string TangleOracle::to_json(const Graph& g) const {
  using json = nlohmann::ordered_json;
  json j;
  j["n"] = n;
  j["graph6"] = to_graph6(g);
  j["order"] = order;
  j["axioms"] = to_string(axioms);
  json arr = json::array();
  for (const auto& e : entries) {
    json o;
    o["side_hex"] = e.side.to_hex();
    o["cutrank"] = e.cutrank;
    o["small"] = e.side_is_small ? "side" : "complement";
    arr.push_back(std::move(o));
  }
  j["orientation"] = std::move(arr);
  return j.dump();
}

TangleOracle TangleOracle::from_json(std::string_view text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
    TangleOracle t;
    t.n = j.at("n").get<std::size_t>();
    t.order = j.at("order").get<std::size_t>();
    t.axioms = j.contains("axioms") ? parse_axioms(j["axioms"].get<std::string>())
                                    : TangleAxioms::kStandard;
    for (const auto& o : j.at("orientation")) {
      OrientedSeparation e;
      e.side = VertexSet::parse(t.n, o.at("side_hex").get<std::string>());
      e.cutrank = o.value("cutrank", std::size_t{0});
      const std::string small = o.at("small").get<std::string>();
      if (small != "side" && small != "complement") {
        throw InputError("orientation 'small' must be \"side\" or \"complement\"");
      }
      e.side_is_small = small == "side";
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("tangle JSON: ") + e.what());
  }
}

TangleSearch find_tangle(const Graph& g, std::size_t k, const SearchOptions& opts,
                         const TangleSearchOptions& tso) {
  require_mask_graph("find_tangle", g, opts, kTangleBudget);
  const std::size_t n = g.n();
  const auto seps = enumerate_low_rank_separations(g, k, SearchOptions{0, true, opts.threads});
  TangleSearch out;
  out.separations = seps.size();

  std::vector<Mask> canon;
  canon.reserve(seps.size());
  for (const auto& s : seps) canon.push_back(s.x.mask());
  Search search(n, tso.axioms == TangleAxioms::kStandard, std::move(canon));

  std::vector<std::size_t> active(seps.size());
  std::iota(active.begin(), active.end(), 0);
  if (search.solve(active)) {
    out.nodes = search.nodes;
    TangleOracle t;
    t.n = n;
    t.order = k;
    t.axioms = tso.axioms;
    for (std::size_t i = 0; i < seps.size(); ++i) {
      t.entries.push_back({seps[i].x, *seps[i].cutrank, search.assign[i] == 0});
    }
    out.tangle = std::move(t);
    return out;
  }

  if (tso.shrink_core && active.size() <= 256) {
    // Drop separations from the expensive end first.
    for (std::size_t pos = active.size(); pos-- > 0;) {
      std::vector<std::size_t> trial = active;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
      if (!search.solve(trial)) active = std::move(trial);
    }
    out.core_minimal = true;
  }
  out.nodes = search.nodes;
  for (std::size_t i : active) out.core.push_back(seps[i]);
  return out;
}

TangleVerdict verify_tangle(const Graph& g, const TangleOracle& oracle, const SearchOptions& opts) {
  TangleVerdict v;
  const auto fail = [&v](std::string kind, std::string message, std::vector<VertexSet> w) {
    v.valid = false;
    v.kind = std::move(kind);
    v.message = std::move(message);
    v.witness = std::move(w);
    return v;
  };
  if (oracle.n != g.n()) {
    return fail("host", "oracle is for n = " + std::to_string(oracle.n) + ", graph has n = " +
                            std::to_string(g.n()), {});
  }
  require_mask_graph("verify_tangle", g, opts, kTangleBudget);
  const std::size_t n = g.n();
  const Mask full = full_mask(n);

  std::vector<Mask> keys;
  std::vector<Mask> small;
  for (const auto& e : oracle.entries) {
    if (e.side.universe() != n) return fail("host", "entry over the wrong vertex count", {e.side});
    const Mask key = canonical_side(e.side.mask(), full);
    if (cutrank_mask(g, key) >= oracle.order) {
      return fail("extra", "separation " + e.side.to_hex() + " has cutrank >= order", {e.side});
    }
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
      return fail("duplicate", "separation " + e.side.to_hex() + " is oriented twice", {e.side});
    }
    keys.push_back(key);
    small.push_back(e.small().mask());
  }
  std::vector<Mask> sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  for (const auto& s : enumerate_low_rank_separations(g, oracle.order,
                                                      SearchOptions{0, true, opts.threads})) {
    if (!std::binary_search(sorted_keys.begin(), sorted_keys.end(), s.x.mask())) {
      return fail("missing", "separation " + s.x.to_hex() + " is not oriented", {s.x});
    }
  }
  if (oracle.axioms == TangleAxioms::kStandard) {
    for (Mask s : small) {
      if (static_cast<std::size_t>(std::popcount(s)) + 1 == n) {
        return fail("singleton", "small side " + VertexSet::from_mask(n, s).to_hex() +
                                     " misses a single vertex", {VertexSet::from_mask(n, s)});
      }
    }
  }
  SupersetCounter sup(n);
  for (Mask s : small) sup.add(s);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const Mask d = full & ~(small[i] | small[j]);
      if (!sup.any_superset(d)) continue;
      Mask third = 0;
      if ((small[i] & d) == d) {
        third = small[i];
      } else if ((small[j] & d) == d) {
        third = small[j];
      } else {
        for (Mask t : small) {
          if ((t & d) == d) {
            third = t;
            break;
          }
        }
      }
      return fail("cover", "three small sides cover V",
                  {VertexSet::from_mask(n, small[i]), VertexSet::from_mask(n, small[j]),
                   VertexSet::from_mask(n, third)});
    }
  }
  return v;
}

WellBehavedResult is_well_behaved(const Graph& g, const VertexSet& x, const WellBehavedParams& p,
                                  const SearchOptions& opts) {
  if (x.universe() != g.n()) throw InputError("is_well_behaved: set is over the wrong universe");
  if (p.eps_den == 0) throw InputError("is_well_behaved: eps_den must be positive");
  enforce_budget("is_well_behaved", x.size(), opts, kWellBehavedBudget, 30);
  const VertexSet y = x.complement();
  const std::uint64_t s = p.s ? *p.s : 3 * y.size();
  const std::uint64_t cap_a = 70 * static_cast<std::uint64_t>(p.r);
  const unsigned __int128 need = static_cast<unsigned __int128>(420) * p.r * p.eps_num;
  const std::vector<std::size_t> xs = x.members();
  const std::size_t m = xs.size();

  WellBehavedResult out;
  // A by increasing size, lexicographic within a size.
  for (std::size_t size = 0; size <= m && size <= 6 * s; ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet a(g.n());
      for (std::size_t i : idx) a.insert(xs[i]);
      const std::size_t cut_ay = cross_rank(g, a, y);
      if (cut_ay <= cap_a) {
        VertexSet b = x - a;
        const std::size_t cut_b = cutrank(g, b);
        if (static_cast<unsigned __int128>(p.eps_den) * cut_b < need) {
          out.well_behaved = false;
          out.cut_a_y = cut_ay;
          out.cut_b = cut_b;
          out.counterexample = std::make_pair(std::move(a), std::move(b));
          return out;
        }
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Separation maximal_oriented_separation(const Graph& g, const TangleOracle& oracle,
                                       std::size_t rank_bound) {
  if (oracle.order < rank_bound) {
    throw InputError("maximal_oriented_separation: oracle order " + std::to_string(oracle.order) +
                     " < rank bound " + std::to_string(rank_bound));
  }
  if (oracle.n != g.n()) throw InputError("maximal_oriented_separation: oracle/graph size mismatch");
  std::optional<Separation> best;
  for (const auto& e : oracle.entries) {
    if (e.cutrank >= rank_bound) continue;
    VertexSet x = e.small();
    const std::size_t c = e.cutrank;
    if (!best) {
      best = Separation{std::move(x), c};
      continue;
    }
    const std::size_t bs = best->x.size();
    if (x.size() > bs || (x.size() == bs && (c < *best->cutrank ||
                                             (c == *best->cutrank && subset_less(x, best->x))))) {
      best = Separation{std::move(x), c};
    }
  }
  if (!best) throw InputError("maximal_oriented_separation: no separation below the rank bound");
  return *best;
}

CutProvider default_cut_provider(const SearchOptions& opts) {
  return [opts](const Graph& sub, std::size_t r) -> std::optional<std::pair<VertexSet, VertexSet>> {
    if (sub.n() < 2) return std::nullopt;
    try {
      MinBalResult m = min_bal_cutrank(sub, opts);
      if (m.value >= r) return std::nullopt;
      VertexSet u2 = m.witness.x.complement();
      return std::make_pair(std::move(m.witness.x), std::move(u2));
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };
}

AmplificationTrace amplify(const Graph& g, const VertexSet& x0, std::size_t r, std::size_t steps,
                           const CutProvider& provider) {
  if (x0.universe() != g.n()) throw InputError("amplify: X0 is over the wrong universe");
  const CutProvider& cut = provider ? provider : default_cut_provider();
  AmplificationTrace t;
  t.r = r;
  t.requested_steps = steps;
  t.steps.push_back({x0, x0.complement(), cutrank(g, x0), std::nullopt, 0});
  const auto violate = [&t](std::string why) {
    if (t.bounds_hold) {
      t.bounds_hold = false;
      t.violation = std::move(why);
    }
  };

  for (std::size_t i = 0; i < steps; ++i) {
    AmplificationStep& cur = t.steps.back();
    if (cur.y.empty()) {
      t.stop_reason = "Y is empty";
      break;
    }
    const InducedSubgraph sub = induced_subgraph(g, cur.y);
    auto pick = cut(sub.graph, r);
    if (!pick) {
      t.stop_reason = "provider refused at step " + std::to_string(i);
      break;
    }
    auto& [u1s, u2s] = *pick;
    const std::size_t m = sub.graph.n();
    if (u1s.universe() != m || u2s.universe() != m || u1s.intersects(u2s) ||
        (u1s | u2s).size() != m) {
      throw ContractViolation("cut provider returned sets that do not partition G[Y_" +
                              std::to_string(i) + "]");
    }
    if (!is_balanced(m, u1s.size())) {
      throw ContractViolation("cut provider returned an unbalanced cut at step " +
                              std::to_string(i));
    }
    const std::size_t rank_sub = cutrank(sub.graph, u1s);
    if (rank_sub >= r) {
      throw ContractViolation("cut provider returned a cut of rank " + std::to_string(rank_sub) +
                              " >= r at step " + std::to_string(i));
    }
    VertexSet u1 = sub.lift(u1s, g.n());
    VertexSet u2 = sub.lift(u2s, g.n());
    cur.cut = std::make_pair(u1, u2);
    cur.cut_rank = rank_sub;

    VertexSet nx = cur.x | u1;
    const std::size_t c_next = cutrank(g, nx);
    const std::size_t chain = cross_rank(g, cur.x, u2) + cross_rank(g, u1, u2);
    const std::size_t c_prev = cur.cutrank;
    const std::size_t y_prev = cur.y.size();
    const bool x_grows = cur.x.is_subset_of(nx);
    t.steps.push_back({std::move(nx), u2, c_next, std::nullopt, 0});

    const std::string at = " at step " + std::to_string(i + 1);
    if (c_next > chain) violate("subadditivity chain fails" + at);
    if (c_next >= c_prev + r) violate("per-step cutrank bound fails" + at);
    if (3 * u2.size() > 2 * y_prev) violate("Y did not shrink to 2/3" + at);
    if (!x_grows || !u2.is_subset_of(t.steps[t.steps.size() - 2].y)) violate("chain not monotone" + at);
  }
  t.completed = t.applied() == steps;
  if (t.completed && t.stop_reason.empty()) t.stop_reason = "completed";
  const std::size_t s = t.applied();
  if (t.steps.back().cutrank >= t.steps.front().cutrank + s * r && s > 0) {
    violate("aggregate bound cutrank(X_s, Y_s) < cutrank(X_0, Y_0) + s*r fails");
  }
  return t;
}

std::string AmplificationTrace::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  j["r"] = r;
  j["requested_steps"] = requested_steps;
  j["applied_steps"] = applied();
  j["completed"] = completed;
  j["stop_reason"] = stop_reason;
  j["bounds_hold"] = bounds_hold;
  if (!bounds_hold) j["violation"] = violation;
  json arr = json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    json o;
    o["i"] = i;
    o["x"] = s.x.to_hex();
    o["y"] = s.y.to_hex();
    o["cutrank"] = s.cutrank;
    if (s.cut) {
      o["u1"] = s.cut->first.to_hex();
      o["u2"] = s.cut->second.to_hex();
      o["cut_rank"] = s.cut_rank;
    }
    arr.push_back(std::move(o));
  }
  j["steps"] = std::move(arr);
  return j.dump();
}

SplitResult split_y_subgraph(const Graph& g, const VertexSet& x_star, const VertexSet& y) {
  if (x_star.universe() != g.n() || y.universe() != g.n()) {
    throw InputError("split_y_subgraph: sets are over the wrong universe");
  }
  if (x_star.intersects(y)) throw InputError("split_y_subgraph: X* and Y overlap");
  if (y.empty()) throw InputError("split_y_subgraph: Y must be nonempty");
  const std::size_t keep = (y.size() - 1) / 2;
  VertexSet xss(g.n());
  std::size_t taken = 0;
  for (std::size_t v : x_star.members()) {
    if (taken == keep) break;
    xss.insert(v);
    ++taken;
  }
  SplitResult out{induced_subgraph(g, y | xss), xss, {}, {}, 0, 0};
  const std::size_t m = out.h.graph.n();
  out.x_in_h = VertexSet(m);
  out.y_in_h = VertexSet(m);
  for (std::size_t i = 0; i < m; ++i) {
    (xss.contains(out.h.to_original[i]) ? out.x_in_h : out.y_in_h).insert(i);
  }
  out.cutrank_h = cutrank(out.h.graph, out.x_in_h);
  out.cross_rank_star = cross_rank(g, x_star, y);
  if (out.cutrank_h > out.cross_rank_star) {
    throw ContractViolation("split_y_subgraph: restricting X* increased the rank");
  }
  return out;
}

LiftResult lift_cut(const Graph& g, const VertexSet& x, const VertexSet& a_y, const VertexSet& b_y,
                    std::size_t hprime_cutrank) {
  const std::size_t n = g.n();
  if (x.universe() != n || a_y.universe() != n || b_y.universe() != n) {
    throw InputError("lift_cut: sets are over the wrong universe");
  }
  const VertexSet y = x.complement();
  if (a_y.intersects(b_y) || (a_y | b_y) != y) throw InputError("lift_cut: A_y, B_y must partition V \\ X");
  if (a_y.empty() || b_y.empty()) throw InputError("lift_cut: both parts of Y must be nonempty");

  LiftResult out;
  out.p1 = make_separation(g, x | a_y);
  out.p2 = make_separation(g, x | b_y);
  out.cutrank_x = cutrank(g, x);
  out.cross_ab = cross_rank(g, a_y, b_y);
  out.cross_x_a = cross_rank(g, x, a_y);
  out.cross_x_b = cross_rank(g, x, b_y);
  out.hprime_cutrank = hprime_cutrank;
  const std::size_t c1 = *out.p1.cutrank;
  const std::size_t c2 = *out.p2.cutrank;
  out.certificates_hold = c1 <= out.cutrank_x + hprime_cutrank && c2 <= out.cutrank_x + hprime_cutrank;
  out.chain_holds = c1 <= out.cross_x_b + out.cross_ab && c2 <= out.cross_x_a + out.cross_ab &&
                    out.cross_x_a <= out.cutrank_x && out.cross_x_b <= out.cutrank_x &&
                    out.cross_ab <= hprime_cutrank;
  out.r = std::max<std::size_t>({1, (out.cutrank_x + 1 + 69) / 70, hprime_cutrank + 1});
  out.below_72r = c1 < 72 * out.r && c2 < 72 * out.r;
  return out;
}

BlockBound split_block_ranks(const Graph& h, const VertexSet& xs, const VertexSet& y,
                             const VertexSet& a) {
  if (xs.intersects(y) || (xs | y).size() != h.n()) {
    throw InputError("split_block_ranks: X** and Y must partition V(H)");
  }
  const VertexSet b = a.complement();
  BlockBound out;
  out.rank_m = cross_rank(h, xs, y);
  out.rank_ab = cross_rank(h, a & xs, b & y);
  out.rank_aa = cross_rank(h, a & xs, a & y);
  out.rank_bb = cross_rank(h, b & xs, b & y);
  out.cut_ab = cutrank(h, a);
  out.holds = out.rank_aa + out.rank_bb <= out.rank_m + out.rank_ab;
  return out;
}

}  // namespace rlab
