#include "rlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "parallel.hpp"
#include "rlab/bit_matrix.hpp"
#include "rlab/cuts.hpp"
#include "rlab/errors.hpp"
#include "rlab/rankwidth.hpp"
#include "rlab/rng.hpp"
#include "rlab/tangle.hpp"

namespace rlab {
namespace {

using json = nlohmann::ordered_json;

VertexSet random_subset(std::size_t n, CounterRng& rng) {
  VertexSet s(n);
  for (std::size_t base = 0; base < n; base += 64) {
    std::uint64_t w = rng.next();
    for (std::size_t i = base; i < std::min(n, base + 64); ++i, w >>= 1) {
      if (w & 1U) s.insert(i);
    }
  }
  return s;
}

json sets_json(const Graph& g, std::initializer_list<std::pair<const char*, const VertexSet*>> sets) {
  json j;
  j["graph6"] = to_graph6(g);
  for (const auto& [name, s] : sets) j[name] = s->to_hex();
  return j;
}

void fail(CheckReport& r, std::string detail, json counterexample) {
  if (r.verdict == Verdict::kFail) return;  // keep the first
  r.verdict = Verdict::kFail;
  r.detail = std::move(detail);
  r.counterexample = counterexample.dump();
}

CheckReport make_report(std::string name, const Graph* g) {
  CheckReport r;
  r.check = std::move(name);
  if (g) r.n = g->n();
  return r;
}

std::string format_double(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

double CheckReport::value(std::string_view key, double fallback) const {
  for (const auto& [k, v] : measured) {
    if (k == key) return v;
  }
  return fallback;
}

void CheckReport::set(std::string key, double v) {
  for (auto& [k, old] : measured) {
    if (k == key) {
      old = v;
      return;
    }
  }
  measured.emplace_back(std::move(key), v);
}

std::string CheckReport::to_json() const {
  json j;
  j["check"] = check;
  j["instance"] = instance;
  j["generator"] = generator;
  j["seed"] = seed;
  j["n"] = n;
  j["p"] = p;
  j["verdict"] = to_string(verdict);
  json m = json::object();
  for (const auto& [k, v] : measured) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15) {
      m[k] = static_cast<long long>(v);
    } else {
      m[k] = v;
    }
  }
  j["measured"] = std::move(m);
  if (!counterexample.empty()) j["counterexample"] = json::parse(counterexample);
  if (!detail.empty()) j["detail"] = detail;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

CheckReport check_sandwich(const Graph& g, const SearchOptions& opts) {
  CheckReport r = make_report("sandwich", &g);
  try {
    const auto w = rankwidth_exact(g, opts);
    SearchOptions mopts = opts;
    const auto m = max_min_bal_cutrank_over_induced(g, mopts);
    r.set("rankwidth", static_cast<double>(w.value));
    r.set("maxminbal", static_cast<double>(m.value));
    r.set("ratio", static_cast<double>(w.value) / static_cast<double>(std::max<std::size_t>(m.value, 1)));
    if (m.value > w.value) {
      fail(r, "max-min-bal-cutrank exceeds rankwidth", sets_json(g, {{"witness", &m.witness}}));
    }
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::kSkipped;
    r.detail = e.what();
  }
  return r;
}

CheckReport check_complement_cutrank(const Graph& g, std::size_t samples, std::uint64_t seed) {
  CheckReport r = make_report("complement", &g);
  const Graph h = complement(g);
  CounterRng rng(stream_key(seed, "complement", 0));
  std::size_t worst = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(g.n(), rng);
    const std::size_t a = cutrank(g, x);
    const std::size_t b = cutrank(h, x);
    const std::size_t d = a > b ? a - b : b - a;
    worst = std::max(worst, d);
    if (d > 1) fail(r, "complement changed cutrank by " + std::to_string(d), sets_json(g, {{"x", &x}}));
  }
  r.set("samples", static_cast<double>(samples));
  r.set("max_delta", static_cast<double>(worst));
  return r;
}

CheckReport check_class_count_bounds(const Graph& g, std::size_t samples, std::uint64_t seed) {
  CheckReport r = make_report("class_count", &g);
  CounterRng rng(stream_key(seed, "class_count", 0));
  const SearchOptions forced{0, true, 1};
  std::size_t max_classes = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(g.n(), rng);
    const auto nc = neighborhood_classes(g, x);
    const std::size_t ny = nc.count();
    const std::size_t c = cutrank(g, x);
    max_classes = std::max(max_classes, ny);
    const std::size_t d = vc_dimension(nc, forced);
    const BigInt ss = sauer_shelah_bound(x.size(), std::min(d, x.size()));
    const bool pow_ok = c >= 63 || ny <= (std::size_t{1} << c);
    if (!pow_ok) fail(r, "N_Y > 2^cutrank", sets_json(g, {{"x", &x}}));
    if (c > nc.nonzero_count()) fail(r, "cutrank exceeds nonzero class count", sets_json(g, {{"x", &x}}));
    if (BigInt(ny) > ss) fail(r, "N_Y exceeds the Sauer-Shelah bound", sets_json(g, {{"x", &x}}));
  }
  r.set("samples", static_cast<double>(samples));
  r.set("max_classes", static_cast<double>(max_classes));
  return r;
}

CheckReport check_helper_inequality(const Graph& g, std::size_t samples, std::uint64_t seed) {
  CheckReport r = make_report("helper", &g);
  CounterRng rng(stream_key(seed, "helper", 0));
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(g.n(), rng);
    const VertexSet a = random_subset(g.n(), rng);
    const VertexSet y = x.complement();
    const VertexSet b = a.complement();
    const std::size_t lhs = cutrank(g, x);
    const std::size_t rhs_plus = cross_rank(g, a & x, a & y) + cross_rank(g, b & x, b & y);
    const std::size_t cut_ab = cutrank(g, a);
    if (lhs + cut_ab < rhs_plus) {
      fail(r, "helper inequality fails", sets_json(g, {{"x", &x}, {"a", &a}}));
    }
  }
  r.set("samples", static_cast<double>(samples));
  return r;
}

CheckReport check_compression(const Graph& g, std::size_t samples, std::uint64_t seed) {
  CheckReport r = make_report("compression", &g);
  CounterRng rng(stream_key(seed, "compression", 0));
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(g.n(), rng);
    const VertexSet y = x.complement();
    const std::size_t c = cutrank(g, x);
    const VertexSet xs = compress_representatives(g, x);
    if (cross_rank(g, xs, y) != c) fail(r, "compression changed cutrank", sets_json(g, {{"x", &x}}));
    const VertexSet xp = minimal_row_set(g, x);
    if (xp.size() != c) fail(r, "row set size differs from cutrank", sets_json(g, {{"x", &x}}));
    if (neighborhood_classes(g, xp, y).count() != neighborhood_classes(g, x, y).count()) {
      fail(r, "row set changed the class count", sets_json(g, {{"x", &x}}));
    }
  }
  r.set("samples", static_cast<double>(samples));
  return r;
}

CheckReport check_lifting(const Graph& g, std::size_t samples, std::uint64_t seed,
                          const SearchOptions& opts) {
  CheckReport r = make_report("lifting", &g);
  CounterRng rng(stream_key(seed, "lifting", 0));
  std::size_t lifted = 0;
  std::size_t partitions = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(g.n(), rng);
    const VertexSet y = x.complement();
    if (y.size() < 2) continue;
    const VertexSet xstar = compress_representatives(g, x);
    const SplitResult sp = split_y_subgraph(g, xstar, y);
    const Graph& h = sp.h.graph;
    const std::size_t m = h.n();
    if (m <= 16) {
      // Every balanced cut of H' meets Y on both sides.
      const std::uint64_t ymask = sp.y_in_h.mask();
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
        if (!is_balanced(m, static_cast<std::size_t>(std::popcount(a)))) continue;
        ++partitions;
        if ((a & ymask) == 0 || (~a & ymask) == 0) {
          const VertexSet av = VertexSet::from_mask(m, a);
          fail(r, "balanced cut of H' misses Y", sets_json(g, {{"x", &x}, {"a_in_h", &av}}));
        }
      }
    }
    MinBalResult cut;
    try {
      cut = min_bal_cutrank(h, opts);
    } catch (const BudgetExceeded&) {
      continue;
    }
    const VertexSet& a = cut.witness.x;
    const VertexSet a_y = sp.h.lift(a & sp.y_in_h, g.n());
    const VertexSet b_y = y - a_y;
    if (a_y.empty() || b_y.empty()) {
      fail(r, "balanced cut of H' misses Y", sets_json(g, {{"x", &x}, {"a_y", &a_y}}));
      continue;
    }
    const LiftResult lr = lift_cut(g, x, a_y, b_y, cut.value);
    ++lifted;
    if (!lr.certificates_hold || !lr.chain_holds || !lr.below_72r) {
      fail(r, "lifting certificate fails", sets_json(g, {{"x", &x}, {"a_y", &a_y}}));
    }
    const BlockBound bb = split_block_ranks(h, sp.x_in_h, sp.y_in_h, a);
    if (!bb.holds || bb.rank_ab > bb.cut_ab) {
      fail(r, "block rank bound fails on H'", sets_json(g, {{"x", &x}, {"a_y", &a_y}}));
    }
  }
  r.set("lifted", static_cast<double>(lifted));
  r.set("partitions", static_cast<double>(partitions));
  return r;
}

CheckReport check_tangle_soundness(const Graph& g, const SearchOptions& opts) {
  CheckReport r = make_report("tangle_soundness", &g);
  try {
    enforce_budget("check_tangle_soundness", g.n(), opts, kTangleBudget, kTangleHardCap);
    const std::size_t w = rankwidth_exact(g, opts).value;
    std::size_t best = 0;
    for (std::size_t k = 1; k <= w + 1; ++k) {
      const TangleSearch ts = find_tangle(g, k, opts);
      if (!ts.tangle) continue;
      best = k;
      const TangleVerdict v = verify_tangle(g, *ts.tangle, opts);
      if (!v.valid) {
        json ce;
        ce["graph6"] = to_graph6(g);
        ce["order"] = k;
        ce["kind"] = v.kind;
        fail(r, "returned tangle fails verification: " + v.message, ce);
      }
      if (k > w) {
        json ce = json::parse(ts.tangle->to_json(g));
        fail(r, "tangle of order " + std::to_string(k) + " exceeds rankwidth " + std::to_string(w), ce);
      }
    }
    r.set("rankwidth", static_cast<double>(w));
    r.set("max_tangle_order", static_cast<double>(best));
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::kSkipped;
    r.detail = e.what();
  }
  return r;
}

CheckReport check_heuristic_bound(const Graph& g, const SearchOptions& opts) {
  CheckReport r = make_report("heuristic", &g);
  try {
    const auto exact = rankwidth_exact(g, opts);
    const auto lin = rankwidth_upper_linear(g);
    r.set("rankwidth", static_cast<double>(exact.value));
    r.set("linear", static_cast<double>(lin.value));
    if (lin.value < exact.value) {
      json ce;
      ce["graph6"] = to_graph6(g);
      fail(r, "heuristic below exact rankwidth", ce);
    }
    if (width_of(g, exact.tree) != exact.value) {
      json ce;
      ce["graph6"] = to_graph6(g);
      fail(r, "exact witness tree has a different width", ce);
    }
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::kSkipped;
    r.detail = e.what();
  }
  return r;
}

CheckReport check_frobenius_fuzz(std::size_t samples, std::uint64_t seed, std::size_t max_dim) {
  CheckReport r = make_report("frobenius", nullptr);
  CounterRng rng(stream_key(seed, "frobenius", 0));
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t a = rng.between(0, max_dim), b = rng.between(0, max_dim);
    const std::size_t c = rng.between(0, max_dim), d = rng.between(0, max_dim);
    const BitMatrix u = BitMatrix::random(a, b, rng, rng.uniform());
    const BitMatrix v = BitMatrix::random(b, c, rng, rng.uniform());
    const BitMatrix w = BitMatrix::random(c, d, rng, rng.uniform());
    const auto verdict = check_frobenius(u, v, w);
    if (!verdict.holds) {
      json ce;
      ce["u"] = u.dump();
      ce["v"] = v.dump();
      ce["w"] = w.dump();
      fail(r, "Frobenius inequality fails", ce);
    }
  }
  r.set("samples", static_cast<double>(samples));
  return r;
}

CheckReport check_block_rank_fuzz(std::size_t samples, std::uint64_t seed, std::size_t max_dim) {
  CheckReport r = make_report("block_rank", nullptr);
  CounterRng rng(stream_key(seed, "block_rank", 0));
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t r1 = rng.between(0, max_dim), r2 = rng.between(0, max_dim);
    const std::size_t c1 = rng.between(0, max_dim), c2 = rng.between(0, max_dim);
    const double density = rng.uniform();
    const BitMatrix a = BitMatrix::random(r1, c1, rng, density);
    const BitMatrix b = BitMatrix::random(r1, c2, rng, density);
    const BitMatrix c = BitMatrix::random(r2, c1, rng, density);
    const BitMatrix d = BitMatrix::random(r2, c2, rng, density);
    if (!check_block_rank(a, b, c, d).holds) {
      json ce;
      ce["a"] = a.dump();
      ce["b"] = b.dump();
      ce["c"] = c.dump();
      ce["d"] = d.dump();
      fail(r, "block rank inequality fails", ce);
    }
  }
  r.set("samples", static_cast<double>(samples));
  return r;
}

// ---- experiments ----

namespace {

using CheckFn = std::function<CheckReport(const Graph&, const ExperimentConfig&, std::uint64_t)>;

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks = {
      {"sandwich",
       [](const Graph& g, const ExperimentConfig& c, std::uint64_t) {
         SearchOptions o{std::min(c.rankwidth_budget, c.maxminbal_budget), false, 1};
         return check_sandwich(g, o);
       }},
      {"complement", [](const Graph& g, const ExperimentConfig& c,
                        std::uint64_t s) { return check_complement_cutrank(g, c.samples, s); }},
      {"class_count", [](const Graph& g, const ExperimentConfig& c,
                         std::uint64_t s) { return check_class_count_bounds(g, c.samples, s); }},
      {"helper", [](const Graph& g, const ExperimentConfig& c,
                    std::uint64_t s) { return check_helper_inequality(g, c.samples, s); }},
      {"compression", [](const Graph& g, const ExperimentConfig& c,
                         std::uint64_t s) { return check_compression(g, c.samples, s); }},
      {"lifting", [](const Graph& g, const ExperimentConfig& c,
                     std::uint64_t s) { return check_lifting(g, c.samples, s); }},
      {"tangle_soundness",
       [](const Graph& g, const ExperimentConfig& c, std::uint64_t) {
         return check_tangle_soundness(g, SearchOptions{c.tangle_budget, false, 1});
       }},
      {"heuristic",
       [](const Graph& g, const ExperimentConfig& c, std::uint64_t) {
         return check_heuristic_bound(g, SearchOptions{c.rankwidth_budget, false, 1});
       }},
      {"frobenius", [](const Graph&, const ExperimentConfig& c,
                       std::uint64_t s) { return check_frobenius_fuzz(c.samples, s); }},
      {"block_rank", [](const Graph&, const ExperimentConfig& c,
                        std::uint64_t s) { return check_block_rank_fuzz(c.samples, s); }},
  };
  return checks;
}

const std::set<std::string> kModels = {"gnp", "clique", "cycle", "path", "edgeless", "bipartite"};

}  // namespace

std::vector<std::string> registered_checks() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::string ExperimentConfig::to_json() const {
  json j;
  json gen;
  gen["model"] = generator.model;
  gen["n_min"] = generator.n_min;
  gen["n_max"] = generator.n_max;
  gen["p"] = generator.p;
  gen["seed"] = generator.seed;
  gen["instances"] = generator.instances;
  j["generator"] = std::move(gen);
  j["checks"] = checks;
  j["samples"] = samples;
  j["budgets"] = {{"rankwidth", rankwidth_budget}, {"maxminbal", maxminbal_budget},
                  {"tangle", tangle_budget}};
  j["threads"] = threads;
  j["timing"] = timing;
  j["output"] = output;
  return j.dump(2);
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw InputError("experiment config must be a JSON object");
    static const std::set<std::string> top = {"generator", "checks", "samples", "budgets",
                                              "threads", "timing", "output"};
    for (const auto& [k, v] : j.items()) {
      if (!top.count(k)) throw InputError("unknown config key '" + k + "'");
    }
    if (j.contains("generator")) {
      const auto& g = j["generator"];
      static const std::set<std::string> keys = {"model", "n_min", "n_max", "p", "seed", "instances"};
      for (const auto& [k, v] : g.items()) {
        if (!keys.count(k)) throw InputError("unknown generator key '" + k + "'");
      }
      auto& gen = cfg.generator;
      gen.model = g.value("model", gen.model);
      if (!kModels.count(gen.model)) throw InputError("unknown generator model '" + gen.model + "'");
      gen.n_min = g.value("n_min", gen.n_min);
      gen.n_max = g.value("n_max", gen.n_max);
      if (g.contains("p")) {
        gen.p = g["p"].is_array() ? g["p"].get<std::vector<double>>()
                                  : std::vector<double>{g["p"].get<double>()};
      }
      gen.seed = g.value("seed", gen.seed);
      gen.instances = g.value("instances", gen.instances);
      if (gen.n_min > gen.n_max) throw InputError("generator n_min exceeds n_max");
      if (gen.p.empty()) throw InputError("generator p list is empty");
      for (double p : gen.p) {
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("generator p must lie in [0, 1]");
      }
    }
    if (j.contains("checks")) {
      for (const auto& c : j["checks"]) {
        const std::string name = c.get<std::string>();
        if (!registry().count(name)) throw InputError("unknown check '" + name + "'");
        cfg.checks.push_back(name);
      }
    }
    cfg.samples = j.value("samples", cfg.samples);
    if (j.contains("budgets")) {
      const auto& b = j["budgets"];
      for (const auto& [k, v] : b.items()) {
        if (k == "rankwidth") cfg.rankwidth_budget = v.get<std::size_t>();
        else if (k == "maxminbal") cfg.maxminbal_budget = v.get<std::size_t>();
        else if (k == "tangle") cfg.tangle_budget = v.get<std::size_t>();
        else throw InputError("unknown budget '" + k + "'");
      }
    }
    cfg.threads = j.value("threads", cfg.threads);
    cfg.timing = j.value("timing", cfg.timing);
    cfg.output = j.value("output", cfg.output);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  return cfg;
}

InstanceSpec instance_spec(const GeneratorSpec& gen, std::size_t index) {
  const std::size_t sizes = gen.n_max - gen.n_min + 1;
  InstanceSpec s;
  s.index = index;
  s.n = gen.n_min + index % sizes;
  s.p = gen.p[(index / sizes) % gen.p.size()];
  s.seed = stream_key(gen.seed, "instance", index);
  return s;
}

Graph generate_instance(const GeneratorSpec& gen, const InstanceSpec& spec) {
  if (gen.model == "gnp") return gen_gnp(spec.n, spec.p, spec.seed);
  if (gen.model == "clique") return gen_clique(spec.n);
  if (gen.model == "cycle") return gen_cycle(spec.n);
  if (gen.model == "path") return gen_path(spec.n);
  if (gen.model == "edgeless") return gen_edgeless(spec.n);
  if (gen.model == "bipartite") return gen_bipartite_random(spec.n / 2, spec.n - spec.n / 2, spec.p, spec.seed);
  throw InputError("unknown generator model '" + gen.model + "'");
}

std::size_t ExperimentResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); }));
}

std::string results_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.to_json();
    out += '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<CheckReport>& reports) {
  struct Row {
    std::size_t instances = 0, passes = 0, fails = 0, skips = 0;
    bool has_ratio = false;
    double max_ratio = 0.0;
    double total_ms = 0.0;
  };
  std::map<std::string, Row> rows;
  for (const auto& r : reports) {
    Row& row = rows[r.check];
    ++row.instances;
    row.passes += r.verdict == Verdict::kPass;
    row.fails += r.verdict == Verdict::kFail;
    row.skips += r.verdict == Verdict::kSkipped;
    const double ratio = r.value("ratio", -1.0);
    if (ratio >= 0.0) {
      row.max_ratio = row.has_ratio ? std::max(row.max_ratio, ratio) : ratio;
      row.has_ratio = true;
    }
    row.total_ms += r.elapsed_ms;
  }
  std::string out = "check,instances,passes,fails,skips,max_ratio,total_ms\n";
  for (const auto& [name, row] : rows) {
    out += name + ',' + std::to_string(row.instances) + ',' + std::to_string(row.passes) + ',' +
           std::to_string(row.fails) + ',' + std::to_string(row.skips) + ',' +
           (row.has_ratio ? format_double(row.max_ratio) : std::string()) + ',' +
           format_double(row.total_ms) + '\n';
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto& reg = registry();
  for (const auto& c : cfg.checks) {
    if (!reg.count(c)) throw InputError("unknown check '" + c + "'");
  }
  const std::size_t count = cfg.generator.instances;
  std::vector<std::vector<CheckReport>> slots(count);
  detail::parallel_for(count, std::max(1u, cfg.threads), [&](std::size_t i) {
    const InstanceSpec spec = instance_spec(cfg.generator, i);
    const Graph g = generate_instance(cfg.generator, spec);
    for (const auto& name : cfg.checks) {
      const auto t0 = std::chrono::steady_clock::now();
      CheckReport r;
      try {
        r = reg.at(name)(g, cfg, spec.seed);
      } catch (const std::exception& e) {
        r = CheckReport{};
        r.check = name;
        r.verdict = Verdict::kFail;
        r.detail = std::string("exception: ") + e.what();
        json ce;
        ce["graph6"] = to_graph6(g);
        r.counterexample = ce.dump();
      }
      const auto t1 = std::chrono::steady_clock::now();
      r.check = name;
      r.instance = i;
      r.generator = cfg.generator.model;
      r.seed = spec.seed;
      r.n = g.n();
      r.p = spec.p;
      r.elapsed_ms = cfg.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
      slots[i].push_back(std::move(r));
    }
  });

  ExperimentResult res;
  for (auto& s : slots) {
    for (auto& r : s) res.reports.push_back(std::move(r));
  }
  std::stable_sort(res.reports.begin(), res.reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.instance < b.instance;
  });

  if (!cfg.output.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    const auto write = [](const fs::path& path, const std::string& content) {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
      f << content;
      if (!f) throw std::runtime_error("write failed for " + path.string());
    };
    res.results_path = (dir / "results.jsonl").string();
    res.summary_path = (dir / "summary.csv").string();
    write(res.results_path, results_jsonl(res.reports));
    write(res.summary_path, summary_csv(res.reports));
    write(dir / "config.json", cfg.to_json() + "\n");
  }
  return res;
}

}  // namespace rlab
