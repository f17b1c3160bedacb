#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/options.hpp"

namespace rlab {

enum class Verdict { kPass, kFail, kSkipped };
std::string to_string(Verdict v);

struct CheckReport {
  std::string check;
  std::size_t instance = 0;
  std::string generator;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0.0;
  Verdict verdict = Verdict::kPass;
  std::vector<std::pair<std::string, double>> measured;
  std::string counterexample;  // JSON object text; empty unless failed
  std::string detail;
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return verdict == Verdict::kPass; }
  bool failed() const noexcept { return verdict == Verdict::kFail; }
  // nullopt-free lookup: returns `fallback` when the key is absent.
  double value(std::string_view key, double fallback = -1.0) const;
  void set(std::string key, double v);
  std::string to_json() const;
};

// max_min_bal_cutrank_over_induced(g) <= rankwidth_exact(g); the ratio
// rankwidth / max(m, 1) is recorded, never asserted.
CheckReport check_sandwich(const Graph& g, const SearchOptions& opts = {});
// |cutrank_G(X) - cutrank_complement(G)(X)| <= 1 on sampled X.
CheckReport check_complement_cutrank(const Graph& g, std::size_t samples, std::uint64_t seed);
// N_Y <= 2^cutrank, cutrank <= nonzero classes, N_Y <= Sauer-Shelah bound.
CheckReport check_class_count_bounds(const Graph& g, std::size_t samples, std::uint64_t seed);
// cutrank(X,Y) >= cutrank(A∩X, A∩Y) + cutrank(B∩X, B∩Y) - cutrank(A,B).
CheckReport check_helper_inequality(const Graph& g, std::size_t samples, std::uint64_t seed);
// compress_representatives keeps cutrank; minimal_row_set keeps the class count.
CheckReport check_compression(const Graph& g, std::size_t samples, std::uint64_t seed);
// split_y_subgraph + lift_cut on sampled X; every balanced cut of H' splits Y.
CheckReport check_lifting(const Graph& g, std::size_t samples, std::uint64_t seed,
                          const SearchOptions& opts = {});
// Tangles found for k = 1 .. rankwidth + 1 never exceed rankwidth and verify.
CheckReport check_tangle_soundness(const Graph& g, const SearchOptions& opts = {});
// rankwidth_exact <= rankwidth_upper_linear, and the exact witness has its width.
CheckReport check_heuristic_bound(const Graph& g, const SearchOptions& opts = {});
// Random matrix triples / quadruples drawn from the instance stream.
CheckReport check_frobenius_fuzz(std::size_t samples, std::uint64_t seed, std::size_t max_dim = 8);
CheckReport check_block_rank_fuzz(std::size_t samples, std::uint64_t seed, std::size_t max_dim = 8);

struct GeneratorSpec {
  std::string model = "gnp";  // gnp, clique, cycle, path, edgeless, bipartite
  std::size_t n_min = 6;
  std::size_t n_max = 10;
  std::vector<double> p{0.5};
  std::uint64_t seed = 1;
  std::size_t instances = 10;
};

struct ExperimentConfig {
  GeneratorSpec generator;
  std::vector<std::string> checks;
  std::size_t samples = 100;
  std::size_t rankwidth_budget = kRankwidthBudget;
  std::size_t maxminbal_budget = kMaxMinBalBudget;
  std::size_t tangle_budget = kTangleBudget;
  unsigned threads = 1;
  bool timing = false;  // off keeps output files byte-identical across runs
  std::string output;   // directory; empty means do not write

  std::string to_json() const;
};

// Unknown keys and unknown check names are rejected with InputError.
ExperimentConfig parse_experiment_config(std::string_view text);

std::vector<std::string> registered_checks();

struct InstanceSpec {
  std::size_t index = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

InstanceSpec instance_spec(const GeneratorSpec& gen, std::size_t index);
Graph generate_instance(const GeneratorSpec& gen, const InstanceSpec& spec);

struct ExperimentResult {
  std::vector<CheckReport> reports;  // sorted by (check, instance)
  std::string results_path;
  std::string summary_path;

  std::size_t failures() const;
};

std::string summary_csv(const std::vector<CheckReport>& reports);
std::string results_jsonl(const std::vector<CheckReport>& reports);

// Runs every check on every instance and writes results.jsonl, summary.csv
// and config.json under cfg.output when set. Per-instance failures are
// recorded and the run continues; I/O failures throw with the path.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace rlab
