// rlab: command-line front end for the cut-rank laboratory.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rlab/cuts.hpp"
#include "rlab/errors.hpp"
#include "rlab/graph.hpp"
#include "rlab/rankwidth.hpp"
#include "rlab/tangle.hpp"
#include "rlab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rlab;

constexpr const char* kVersion = "rlab 0.1.0";

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kBudget = 3 };

struct Common {
  std::string input;
  std::string graph6;
  std::string format = "auto";
  bool as_json = false;
  bool timing = false;
  bool force = false;
  std::size_t budget = 0;
  unsigned threads = 1;

  SearchOptions search() const { return {budget, force, threads}; }
};

void add_common(CLI::App* sub, Common& c, bool wants_graph = true) {
  sub->set_version_flag("--version", kVersion);
  sub->add_flag("--json", c.as_json, "Emit JSON on stdout");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  if (!wants_graph) return;
  auto* in = sub->add_option("--input,-i", c.input, "Graph file (graph6 or edge list)");
  auto* g6 = sub->add_option("--graph6", c.graph6, "Inline graph6 string");
  in->excludes(g6);
  sub->add_option("--format", c.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  sub->add_flag("--force", c.force, "Run past the vertex budget");
  sub->add_option("--budget", c.budget, "Override the vertex budget");
  sub->add_flag("--timing", c.timing, "Report wall-clock times (otherwise 0)");
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  return read_all(f);
}

Graph load_graph(const Common& c) {
  std::string text;
  if (!c.graph6.empty()) {
    return parse_graph6(c.graph6);
  }
  text = c.input.empty() ? read_all(std::cin) : read_file(c.input);
  if (c.format == "graph6") {
    std::string_view v(text);
    while (!v.empty() && (v.back() == '\n' || v.back() == '\r' || v.back() == ' ')) v.remove_suffix(1);
    return parse_graph6(v);
  }
  if (c.format == "edgelist") return parse_edge_list(text);
  return parse_graph_auto(text);
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on), t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!on_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point t0_;
};

void emit_record(const Common& c, const std::string& parameter, const std::string& value_json,
                 const VertexSet& witness, std::size_t n, double ms, const std::string& human) {
  if (c.as_json) {
    std::cout << parameter_record_json(parameter, value_json, witness, n, ms) << '\n';
  } else {
    std::cout << human << '\n';
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-rank graph parameter laboratory"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common c;
  std::string set_text, a_text, order_text, verify_file, axioms = "standard", config_file, out_dir;
  std::string eps_text = "1/7", model = "gnp", out_format = "graph6";
  std::size_t order_k = 0, r = 1, steps = 8, n = 0, a_size = 0, b_size = 0;
  std::optional<std::size_t> s_param, hrank;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool exact = false, heuristic = false, no_core = false;

  auto* cut = app.add_subcommand("cutrank", "Cut-rank of a vertex set");
  add_common(cut, c);
  cut->add_option("--set", set_text, "Vertex set: hex mask (0x25) or list (0,2,5)")->required();

  auto* minbal = app.add_subcommand("minbal", "Minimum balanced cut-rank");
  add_common(minbal, c);

  auto* rankexp = app.add_subcommand("rankexp", "Rank-expansion");
  add_common(rankexp, c);

  auto* rw = app.add_subcommand("rankwidth", "Rankwidth (exact) or a caterpillar upper bound");
  add_common(rw, c);
  auto* ex_flag = rw->add_flag("--exact", exact, "Exact subset DP (default)");
  auto* he_flag = rw->add_flag("--heuristic", heuristic, "Caterpillar upper bound");
  ex_flag->excludes(he_flag);
  rw->add_option("--order", order_text, "Vertex order for --heuristic, e.g. 3,1,0,2");

  auto* mmb = app.add_subcommand("maxminbal", "Max min-bal-cutrank over induced subgraphs");
  add_common(mmb, c);

  auto* classes = app.add_subcommand("classes", "Neighborhood classes of V \\ X over X");
  add_common(classes, c);
  classes->add_option("--set", set_text, "X")->required();

  auto* compress = app.add_subcommand("compress", "One representative per Y-signature class of X");
  add_common(compress, c);
  compress->add_option("--set", set_text, "X")->required();

  auto* tangle = app.add_subcommand("tangle", "Search or verify a rank-tangle");
  add_common(tangle, c);
  tangle->add_option("--order", order_k, "Tangle order k")->required();
  tangle->add_option("--verify", verify_file, "Verify an orientation JSON file instead of searching");
  tangle->add_option("--axioms", axioms, "standard (with singleton axiom) or literal")
      ->check(CLI::IsMember({"standard", "literal"}));
  tangle->add_flag("--no-core", no_core, "Skip minimizing the nonexistence core");

  auto* wb = app.add_subcommand("wellbehaved", "Well-behavedness of (X, V \\ X)");
  add_common(wb, c);
  wb->add_option("--set", set_text, "X")->required();
  wb->add_option("--r", r, "r")->required()->check(CLI::PositiveNumber);
  wb->add_option("--s", s_param, "s (default 3|Y|)");
  wb->add_option("--eps", eps_text, "epsilon as num/den");

  auto* amp = app.add_subcommand("amplify", "Amplification trace from X0");
  add_common(amp, c);
  amp->add_option("--set", set_text, "X0")->required();
  amp->add_option("--r", r, "r")->required()->check(CLI::PositiveNumber);
  amp->add_option("--steps", steps, "Number of steps");

  auto* lift = app.add_subcommand("lift", "Lift a split (A_y, B_y) of Y = V \\ X");
  add_common(lift, c);
  lift->add_option("--set", set_text, "X")->required();
  lift->add_option("--a", a_text, "A_y; B_y is the rest of Y")->required();
  lift->add_option("--hrank", hrank, "cutrank of the cut in H' (default rank Adj(A_y, B_y))");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  add_common(gen, c, false);
  gen->add_option("--model", model, "Model")
      ->check(CLI::IsMember({"gnp", "clique", "cycle", "path", "edgeless", "bipartite"}));
  gen->add_option("--n", n, "Vertex count (bipartite: total when --a/--b absent)");
  gen->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--a", a_size, "Bipartite left part size");
  gen->add_option("--b", b_size, "Bipartite right part size");
  gen->add_option("--out-format", out_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* ver = app.add_subcommand("verify", "Run an experiment config");
  add_common(ver, c, false);
  ver->add_option("--config", config_file, "Experiment config JSON")->required();
  ver->add_option("--out", out_dir, "Output directory (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cout, std::cerr);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (model == "gnp") g = gen_gnp(n, p, seed);
      else if (model == "clique") g = gen_clique(n);
      else if (model == "cycle") g = gen_cycle(n);
      else if (model == "path") g = gen_path(n);
      else if (model == "edgeless") g = gen_edgeless(n);
      else {
        if (a_size == 0 && b_size == 0) {
          a_size = n / 2;
          b_size = n - a_size;
        }
        g = gen_bipartite_random(a_size, b_size, p, seed);
      }
      if (out_format == "edgelist") std::cout << to_edge_list(g);
      else std::cout << to_graph6(g) << '\n';
      return kOk;
    }

    if (ver->parsed()) {
      ExperimentConfig cfg = parse_experiment_config(read_file(config_file));
      if (!out_dir.empty()) cfg.output = out_dir;
      if (c.threads > 1) cfg.threads = c.threads;
      const ExperimentResult res = run_experiment(cfg);
      if (c.as_json) std::cout << results_jsonl(res.reports);
      else std::cout << summary_csv(res.reports);
      return res.failures() ? kViolation : kOk;
    }

    const Graph g = load_graph(c);
    const std::size_t gn = g.n();
    const Timer timer(c.timing);

    if (cut->parsed()) {
      const VertexSet x = VertexSet::parse(gn, set_text);
      const std::size_t v = cutrank(g, x);
      emit_record(c, "cutrank", std::to_string(v), x, gn, timer.ms(), std::to_string(v));
    } else if (minbal->parsed()) {
      const auto res = min_bal_cutrank(g, c.search());
      emit_record(c, "min_bal_cutrank", std::to_string(res.value), res.witness.x, gn, timer.ms(),
                  std::to_string(res.value) + "  witness " + res.witness.x.to_list());
    } else if (rankexp->parsed()) {
      const auto res = rank_expansion(g, c.search());
      emit_record(c, "rank_expansion", quoted(res.value.to_string()), res.witness, gn, timer.ms(),
                  res.value.to_string() + "  witness " + res.witness.to_list());
    } else if (rw->parsed()) {
      RankwidthResult res;
      std::string parameter = "rankwidth";
      if (heuristic) {
        std::optional<std::vector<std::size_t>> ord;
        if (!order_text.empty()) {
          ord.emplace();
          std::stringstream ss(order_text);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            try {
              ord->push_back(static_cast<std::size_t>(std::stoull(tok)));
            } catch (const std::exception&) {
              throw InputError("bad vertex in --order: '" + tok + "'");
            }
          }
        }
        res = rankwidth_upper_linear(g, ord);
        parameter = "rankwidth_upper_linear";
      } else {
        res = rankwidth_exact(g, c.search());
      }
      VertexSet side(gn);
      if (gn >= 2) side = balanced_cut_from_decomposition(g, res.tree).separation.x;
      const double ms = timer.ms();
      if (c.as_json) {
        json j = json::parse(parameter_record_json(parameter, std::to_string(res.value), side, gn, ms));
        j["tree"] = json::parse(tree_to_json(res.tree, gn));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << res.value << '\n';
      }
    } else if (mmb->parsed()) {
      const auto res = max_min_bal_cutrank_over_induced(g, c.search());
      emit_record(c, "max_min_bal_cutrank", std::to_string(res.value), res.witness, gn, timer.ms(),
                  std::to_string(res.value) + "  witness " + res.witness.to_list());
    } else if (classes->parsed()) {
      const VertexSet x = VertexSet::parse(gn, set_text);
      const auto nc = neighborhood_classes(g, x);
      const std::size_t d = vc_dimension(nc, c.search());
      const std::size_t cr = cutrank(g, x);
      const BigInt ss = sauer_shelah_bound(x.size(), d);
      if (c.as_json) {
        json j;
        j["parameter"] = "neighborhood_classes";
        j["n"] = gn;
        j["x"] = x.to_hex();
        j["count"] = nc.count();
        j["nonzero_count"] = nc.nonzero_count();
        j["cutrank"] = cr;
        j["vc_dimension"] = d;
        j["sauer_shelah_bound"] = ss.str();
        json arr = json::array();
        for (std::size_t i = 0; i < nc.count(); ++i) {
          arr.push_back({{"members", nc.classes[i].to_hex()}, {"signature", nc.signatures[i].to_hex()}});
        }
        j["classes"] = std::move(arr);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "classes " << nc.count() << " (nonzero " << nc.nonzero_count() << ")  cutrank "
                  << cr << "  vc " << d << "  sauer-shelah " << ss.str() << '\n';
        for (std::size_t i = 0; i < nc.count(); ++i) {
          std::cout << "  {" << nc.classes[i].to_list() << "} -> {" << nc.signatures[i].to_list() << "}\n";
        }
      }
    } else if (compress->parsed()) {
      const VertexSet x = VertexSet::parse(gn, set_text);
      const VertexSet xs = compress_representatives(g, x);
      const std::size_t before = cutrank(g, x);
      const std::size_t after = cross_rank(g, xs, x.complement());
      if (c.as_json) {
        json j;
        j["parameter"] = "compress_representatives";
        j["n"] = gn;
        j["x"] = x.to_hex();
        j["x_star"] = xs.to_hex();
        j["cutrank"] = before;
        j["cutrank_x_star"] = after;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << xs.to_list() << "  cutrank " << before << " -> " << after << '\n';
      }
      if (before != after) return kViolation;
    } else if (tangle->parsed()) {
      if (!verify_file.empty()) {
        const TangleOracle oracle = TangleOracle::from_json(read_file(verify_file));
        if (oracle.order != order_k) {
          throw InputError("--order " + std::to_string(order_k) + " does not match the file's order " +
                           std::to_string(oracle.order));
        }
        const TangleVerdict v = verify_tangle(g, oracle, c.search());
        if (c.as_json) {
          json j;
          j["valid"] = v.valid;
          if (!v.valid) {
            j["kind"] = v.kind;
            j["message"] = v.message;
            json w = json::array();
            for (const auto& s : v.witness) w.push_back(s.to_hex());
            j["witness"] = std::move(w);
          }
          std::cout << j.dump() << '\n';
        } else {
          std::cout << (v.valid ? "valid" : "invalid: " + v.message) << '\n';
          for (const auto& s : v.witness) std::cout << "  " << s.to_hex() << '\n';
        }
        return v.valid ? kOk : kViolation;
      }
      TangleSearchOptions tso;
      tso.axioms = parse_axioms(axioms);
      tso.shrink_core = !no_core;
      const TangleSearch ts = find_tangle(g, order_k, c.search(), tso);
      if (ts.tangle) {
        if (c.as_json) std::cout << ts.tangle->to_json(g) << '\n';
        else std::cout << "tangle of order " << order_k << " found (" << ts.separations << " separations)\n";
      } else if (c.as_json) {
        json j;
        j["exists"] = false;
        j["order"] = order_k;
        j["axioms"] = axioms;
        j["core_minimal"] = ts.core_minimal;
        json core = json::array();
        for (const auto& s : ts.core) core.push_back({{"side_hex", s.x.to_hex()}, {"cutrank", *s.cutrank}});
        j["core"] = std::move(core);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "no tangle of order " << order_k << "; core of " << ts.core.size()
                  << " separations\n";
        for (const auto& s : ts.core) std::cout << "  " << s.x.to_hex() << " (cutrank " << *s.cutrank << ")\n";
      }
    } else if (wb->parsed()) {
      const VertexSet x = VertexSet::parse(gn, set_text);
      WellBehavedParams wp;
      wp.r = r;
      wp.s = s_param;
      const auto slash = eps_text.find('/');
      try {
        wp.eps_num = std::stoull(eps_text.substr(0, slash));
        wp.eps_den = slash == std::string::npos ? 1 : std::stoull(eps_text.substr(slash + 1));
      } catch (const std::exception&) {
        throw InputError("--eps must look like num/den");
      }
      const auto res = is_well_behaved(g, x, wp, c.search());
      if (c.as_json) {
        json j;
        j["parameter"] = "well_behaved";
        j["n"] = gn;
        j["x"] = x.to_hex();
        j["well_behaved"] = res.well_behaved;
        if (res.counterexample) {
          j["a"] = res.counterexample->first.to_hex();
          j["b"] = res.counterexample->second.to_hex();
          j["cutrank_a_y"] = res.cut_a_y;
          j["cutrank_b"] = res.cut_b;
        }
        std::cout << j.dump() << '\n';
      } else if (res.well_behaved) {
        std::cout << "well-behaved\n";
      } else {
        std::cout << "not well-behaved: A = {" << res.counterexample->first.to_list() << "}, B = {"
                  << res.counterexample->second.to_list() << "}\n";
      }
    } else if (amp->parsed()) {
      const VertexSet x0 = VertexSet::parse(gn, set_text);
      const AmplificationTrace t = amplify(g, x0, r, steps, default_cut_provider(c.search()));
      if (c.as_json) {
        std::cout << t.to_json() << '\n';
      } else {
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          std::cout << "X" << i << " = {" << t.steps[i].x.to_list() << "}  |Y| = " << t.steps[i].y.size()
                    << "  cutrank " << t.steps[i].cutrank << '\n';
        }
        std::cout << t.stop_reason << (t.bounds_hold ? "" : "; " + t.violation) << '\n';
      }
      if (!t.bounds_hold) return kViolation;
    } else if (lift->parsed()) {
      const VertexSet x = VertexSet::parse(gn, set_text);
      const VertexSet a = VertexSet::parse(gn, a_text);
      const VertexSet b = x.complement() - a;
      const std::size_t h = hrank ? *hrank : cross_rank(g, a, b);
      const LiftResult lr = lift_cut(g, x, a, b, h);
      if (c.as_json) {
        json j;
        j["parameter"] = "lift_cut";
        j["n"] = gn;
        j["p1"] = {{"x", lr.p1.x.to_hex()}, {"cutrank", *lr.p1.cutrank}};
        j["p2"] = {{"x", lr.p2.x.to_hex()}, {"cutrank", *lr.p2.cutrank}};
        j["cutrank_x"] = lr.cutrank_x;
        j["hprime_cutrank"] = lr.hprime_cutrank;
        j["certificates_hold"] = lr.certificates_hold;
        j["chain_holds"] = lr.chain_holds;
        j["r"] = lr.r;
        j["below_72r"] = lr.below_72r;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "P1 cutrank " << *lr.p1.cutrank << ", P2 cutrank " << *lr.p2.cutrank << " <= "
                  << lr.cutrank_x << " + " << lr.hprime_cutrank << ": "
                  << (lr.certificates_hold ? "holds" : "FAILS") << '\n';
      }
      if (!lr.certificates_hold || !lr.below_72r) return kViolation;
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ContractViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
