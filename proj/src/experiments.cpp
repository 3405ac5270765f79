#include "fogcache/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

#include "fogcache/baselines.hpp"
#include "fogcache/errors.hpp"
#include "fogcache/random.hpp"

namespace fogcache {

namespace {

constexpr std::uint64_t kPopularityStream = 0x504f50;  // "POP"

struct StrategyInfo {
  Strategy strategy;
  std::string_view name;
};

constexpr StrategyInfo kStrategies[] = {
    {Strategy::NoCoop, "nocoop"},
    {Strategy::Lcd, "lcd"},
    {Strategy::UniformLocal, "ul"},
    {Strategy::ProposedGreedy, "proposed-greedy"},
    {Strategy::ProposedExact, "proposed-exact"},
};

}  // namespace

Scenario generate_scenario(const ScenarioParams& params) {
  if (params.fap_count < 1) throw InvalidInput("scenario: need at least one F-AP");
  if (!(params.region.width > 0) || !(params.region.height > 0)) {
    throw InvalidInput("scenario: region must have positive extent");
  }
  if (!(params.lambda_range.min > 0) || params.lambda_range.max < params.lambda_range.min) {
    throw InvalidInput("scenario: lambda range must satisfy 0 < min <= max");
  }
  const int swaps = params.heterogeneity.value_or(params.file_count / 2);
  if (swaps < 0) throw InvalidInput("scenario: heterogeneity must be >= 0");

  Scenario s;
  s.catalog = Catalog(params.file_count, params.file_size_bits);
  s.region = params.region;
  s.seed = params.seed;
  s.zipf_z = params.zipf_z;
  s.heterogeneity = swaps;
  s.lambda_range = params.lambda_range;

  Rng rng(params.seed);
  const std::uint64_t pop_seed = derive_seed(params.seed, kPopularityStream);
  for (int m = 0; m < params.fap_count; ++m) {
    FapNode fap;
    fap.id = m + 1;
    fap.position.x = uniform_real(rng, 0, params.region.width);
    fap.position.y = uniform_real(rng, 0, params.region.height);
    fap.lambda = uniform_real(rng, params.lambda_range.min, params.lambda_range.max);
    fap.local_pop = local_popularity(s.catalog, params.zipf_z, swaps,
                                     derive_seed(pop_seed, static_cast<std::uint64_t>(m)));
    s.faps.push_back(std::move(fap));
  }
  s.validate();
  return s;
}

std::string_view strategy_name(Strategy s) {
  for (const auto& info : kStrategies) {
    if (info.strategy == s) return info.name;
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (const auto& info : kStrategies) {
    if (info.name == name) return info.strategy;
  }
  throw InvalidInput("unknown strategy '" + std::string(name) + "'");
}

ResultRow run_strategy(const Scenario& scenario, Strategy strategy, const RunConfig& config) {
  ResultRow row;
  row.seed = scenario.seed;
  row.M = static_cast<int>(scenario.fap_count());
  row.F = scenario.catalog.file_count;
  row.K = config.budget.K;
  row.z = scenario.zipf_z;
  row.gamma_d = config.thresholds.gamma_d;
  row.gamma_l = config.thresholds.gamma_l;
  row.strategy = strategy;

  const auto started = std::chrono::steady_clock::now();
  switch (strategy) {
    case Strategy::NoCoop:
    case Strategy::Lcd:
    case Strategy::UniformLocal: {
      const auto result = strategy == Strategy::NoCoop
                              ? baseline_nocoop(scenario, config.budget.K)
                          : strategy == Strategy::Lcd
                              ? baseline_lcd(scenario, config.budget.K, config.thresholds.gamma_d)
                              : baseline_ul(scenario, config.budget.K);
      row.whole_traffic_bps = result.report.whole;
      row.incremental_traffic_bps = result.report.incremental;
      std::size_t clustered = 0;
      for (const auto& c : result.clusters) {
        if (c.size() >= 2) {
          ++row.num_clusters;
          clustered += c.size();
        }
      }
      row.num_nonclustered = scenario.fap_count() - clustered;
      break;
    }
    case Strategy::ProposedGreedy:
    case Strategy::ProposedExact: {
      SolveOptions options;
      options.thresholds = config.thresholds;
      options.solver = strategy == Strategy::ProposedGreedy ? Solver::Greedy : Solver::Exact;
      options.max_cluster_size = config.max_cluster_size;
      const auto result = solve(scenario, config.budget, options);
      row.whole_traffic_bps = result.report.whole;
      row.incremental_traffic_bps = result.report.incremental;
      row.num_clusters = result.solution.clusters.size();
      row.num_nonclustered = result.solution.nonclustered.size();
      row.num_candidates = result.cliques.all_cliques.size();
      row.num_maximal = result.cliques.maximal.size();
      const double slack = 1e-9 * std::max(1.0, result.report.whole);
      if (!(row.whole_traffic_bps + slack >= row.incremental_traffic_bps &&
            row.incremental_traffic_bps >= -slack)) {
        throw InvariantViolation("proposed strategy reported whole < incremental or "
                                 "negative incremental traffic");
      }
      break;
    }
  }
  if (config.record_runtime) {
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  }
  return row;
}

std::string_view sweep_variable_name(SweepVariable v) {
  switch (v) {
    case SweepVariable::KOverF: return "k-over-f";
    case SweepVariable::GammaD: return "gamma-d";
    case SweepVariable::GammaL: return "gamma-l";
  }
  return "unknown";
}

SweepVariable parse_sweep_variable(std::string_view name) {
  for (auto v : {SweepVariable::KOverF, SweepVariable::GammaD, SweepVariable::GammaL}) {
    if (sweep_variable_name(v) == name) return v;
  }
  throw InvalidInput("unknown sweep variable '" + std::string(name) + "'");
}

std::vector<double> default_sweep_values(SweepVariable v) {
  switch (v) {
    case SweepVariable::KOverF: return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    case SweepVariable::GammaD: return {100, 200, 300, 400, 500, 600};
    case SweepVariable::GammaL: return {0, 10, 20, 30};
  }
  return {};
}

void SweepSpec::validate() const {
  if (values.empty()) throw InvalidInput("sweep: no values given");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      throw InvalidInput("sweep: values must be strictly increasing");
    }
  }
  if (strategies.empty()) throw InvalidInput("sweep: no strategies given");
  if (replications < 1) throw InvalidInput("sweep: replications must be >= 1");
  if (variable == SweepVariable::KOverF) {
    for (double v : values) {
      if (!(v > 0 && v <= 1)) throw InvalidInput("sweep: K/F values must lie in (0, 1]");
    }
  } else {
    for (double v : values) {
      if (!(v >= 0)) throw InvalidInput("sweep: thresholds must be nonnegative");
    }
  }
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<Scenario> scenarios;
  for (int r = 0; r < spec.replications; ++r) {
    ScenarioParams params = spec.scenario;
    params.seed = spec.scenario.seed + static_cast<std::uint64_t>(r);
    scenarios.push_back(generate_scenario(params));
  }

  std::vector<ResultRow> rows;
  for (double value : spec.values) {
    RunConfig config = spec.fixed;
    switch (spec.variable) {
      case SweepVariable::KOverF: {
        const int files = spec.scenario.file_count;
        config.budget.K = std::clamp(static_cast<int>(std::lround(value * files)), 1, files);
        break;
      }
      case SweepVariable::GammaD: config.thresholds.gamma_d = value; break;
      case SweepVariable::GammaL: config.thresholds.gamma_l = value; break;
    }
    for (const auto& scenario : scenarios) {
      for (Strategy strategy : spec.strategies) {
        try {
          rows.push_back(run_strategy(scenario, strategy, config));
          rows.back().sweep_value = value;
        } catch (const std::exception& e) {
          const std::string where = "sweep row (" + std::string(sweep_variable_name(spec.variable)) +
                                    "=" + format_double(value) +
                                    ", seed=" + std::to_string(scenario.seed) +
                                    ", strategy=" + std::string(strategy_name(strategy)) +
                                    "): " + e.what();
          if (dynamic_cast<const InvalidInput*>(&e)) throw InvalidInput(where);
          throw InvariantViolation(where);
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
    if (a.seed != b.seed) return a.seed < b.seed;
    return strategy_name(a.strategy) < strategy_name(b.strategy);
  });
  return rows;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw InvariantViolation("failed to format number");
  return std::string(buffer, end);
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.seed << ',' << r.M << ',' << r.F << ',' << r.K << ',' << format_double(r.z) << ','
        << format_double(r.gamma_d) << ',' << format_double(r.gamma_l) << ','
        << strategy_name(r.strategy) << ',' << format_double(r.whole_traffic_bps) << ','
        << format_double(r.incremental_traffic_bps) << ',' << r.num_clusters << ','
        << r.num_nonclustered << ',' << r.num_candidates << ',' << r.num_maximal << ','
        << format_double(r.runtime_ms) << '\n';
  }
}

std::string format_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace fogcache
