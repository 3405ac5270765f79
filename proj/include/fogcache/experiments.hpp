#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fogcache/conflict.hpp"
#include "fogcache/nodegraph.hpp"
#include "fogcache/scenario.hpp"
#include "fogcache/traffic.hpp"

namespace fogcache {

/// Inputs to generate_scenario. Defaults follow the reference setup
/// (z = 0.6, M = 13, F = 50, L = 200 Mb).
struct ScenarioParams {
  int fap_count = 13;
  int file_count = 50;
  double file_size_bits = 200e6;
  double zipf_z = 0.6;
  std::optional<int> heterogeneity;  // defaults to F / 2
  Region region;
  LoadRange lambda_range;
  std::uint64_t seed = 1;
};

/// Uniform positions over the region, uniform arrival rates over the range,
/// transposition-based local popularity. Deterministic in params.seed.
Scenario generate_scenario(const ScenarioParams& params);

enum class Strategy { NoCoop, Lcd, UniformLocal, ProposedGreedy, ProposedExact };

std::string_view strategy_name(Strategy s);
/// Accepts nocoop, lcd, ul, proposed-greedy, proposed-exact.
Strategy parse_strategy(std::string_view name);

/// Everything besides the scenario that a single run needs.
struct RunConfig {
  CacheBudget budget{5};
  Thresholds thresholds{100.0, 10.0};
  std::optional<std::size_t> max_cluster_size;
  bool record_runtime = false;  // otherwise runtime_ms is written as 0
};

struct ResultRow {
  std::uint64_t seed = 0;
  int M = 0;
  int F = 0;
  int K = 0;
  double z = 0;
  double gamma_d = 0;
  double gamma_l = 0;
  Strategy strategy = Strategy::ProposedGreedy;
  double whole_traffic_bps = 0;
  double incremental_traffic_bps = 0;
  std::size_t num_clusters = 0;
  std::size_t num_nonclustered = 0;
  std::size_t num_candidates = 0;  // N'
  std::size_t num_maximal = 0;     // P
  double runtime_ms = 0;
  double sweep_value = 0;  // not written; used for ordering
};

ResultRow run_strategy(const Scenario& scenario, Strategy strategy, const RunConfig& config);

enum class SweepVariable { KOverF, GammaD, GammaL };

std::string_view sweep_variable_name(SweepVariable v);
/// Accepts k-over-f, gamma-d, gamma-l.
SweepVariable parse_sweep_variable(std::string_view name);

/// Default sweep grid for a variable.
std::vector<double> default_sweep_values(SweepVariable v);

struct SweepSpec {
  SweepVariable variable = SweepVariable::KOverF;
  std::vector<double> values;
  ScenarioParams scenario;  // replication r uses seed scenario.seed + r
  RunConfig fixed;
  std::vector<Strategy> strategies;
  int replications = 1;

  void validate() const;
};

/// One row per value x replication x strategy, sorted by (value, seed,
/// strategy name). A failing row aborts with its parameters in the message.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "seed,M,F,K,z,gamma_d_m,gamma_l_rps,strategy,whole_traffic_bps,"
    "incremental_traffic_bps,num_clusters,num_nonclustered,num_candidates,"
    "num_maximal,runtime_ms";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::string format_csv(const std::vector<ResultRow>& rows);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace fogcache
