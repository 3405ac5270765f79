// fogcache: cooperative caching optimizer for fog access point deployments.
//
//   fogcache gen    --out scenario.json [-M 13 -F 50 ...]
//   fogcache solve  (--scenario PATH | --generate ...) [--strategy ...] [--out CSV]
//   fogcache sweep  --var k-over-f|gamma-d|gamma-l [--values ...] [--reps N] [--out CSV]
//   fogcache verify [--graphs N] [--seed S]
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fogcache/cliques.hpp"
#include "fogcache/conflict.hpp"
#include "fogcache/errors.hpp"
#include "fogcache/experiments.hpp"
#include "fogcache/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace fogcache;

namespace {

constexpr const char* kOutputDirEnv = "FOGCACHE_OUTPUT_DIR";

struct GenerateFlags {
  ScenarioParams params;
  int heterogeneity = -1;
};

void add_generate_flags(CLI::App& cmd, GenerateFlags& g) {
  cmd.add_option("-M,--faps", g.params.fap_count, "number of F-APs")->capture_default_str();
  cmd.add_option("-F,--files", g.params.file_count, "catalog size")->capture_default_str();
  cmd.add_option("-L,--file-bits", g.params.file_size_bits, "file size in bits")->capture_default_str();
  cmd.add_option("-z,--zipf", g.params.zipf_z, "Zipf exponent")->capture_default_str();
  cmd.add_option("--het-swaps", g.heterogeneity,
                 "transpositions per local popularity vector (default F/2)");
  cmd.add_option("--seed", g.params.seed, "scenario seed")->capture_default_str();
  cmd.add_option("--width", g.params.region.width, "region width in meters")->capture_default_str();
  cmd.add_option("--height", g.params.region.height, "region height in meters")->capture_default_str();
  cmd.add_option("--lambda-min", g.params.lambda_range.min, "minimum arrival rate")->capture_default_str();
  cmd.add_option("--lambda-max", g.params.lambda_range.max, "maximum arrival rate")->capture_default_str();
}

ScenarioParams resolve(const GenerateFlags& g) {
  ScenarioParams p = g.params;
  if (g.heterogeneity >= 0) p.heterogeneity = g.heterogeneity;
  return p;
}

struct RunFlags {
  RunConfig config;
  std::string kn_policy = "full";
  std::size_t max_cluster_size = 0;
};

void add_run_flags(CLI::App& cmd, RunFlags& r, bool with_k) {
  if (with_k) {
    cmd.add_option("-K,--cache", r.config.budget.K, "files per F-AP cache")->capture_default_str();
  }
  cmd.add_option("--gamma-d", r.config.thresholds.gamma_d, "distance threshold (m)")->capture_default_str();
  cmd.add_option("--gamma-l", r.config.thresholds.gamma_l, "load-difference threshold (req/s)")
      ->capture_default_str();
  cmd.add_option("--kn-policy", r.kn_policy, "full | fixed:V")->capture_default_str();
  cmd.add_option("--max-cluster-size", r.max_cluster_size, "largest candidate cluster (0 = unbounded)");
  cmd.add_flag("--timing", r.config.record_runtime, "record runtime_ms (breaks byte-identical output)");
}

RunConfig resolve(const RunFlags& r) {
  RunConfig config = r.config;
  if (r.kn_policy == "full") {
    config.budget.policy = KnPolicy::FullDiversity;
  } else if (r.kn_policy.rfind("fixed:", 0) == 0) {
    config.budget.policy = KnPolicy::Fixed;
    try {
      config.budget.fixed_kn = std::stoi(r.kn_policy.substr(6));
    } catch (const std::exception&) {
      throw InvalidInput("--kn-policy: expected fixed:<integer>");
    }
  } else {
    throw InvalidInput("--kn-policy must be 'full' or 'fixed:V'");
  }
  if (r.max_cluster_size > 0) config.max_cluster_size = r.max_cluster_size;
  return config;
}

std::vector<Strategy> parse_strategies(const std::vector<std::string>& names) {
  std::vector<Strategy> out;
  for (const auto& name : names) out.push_back(parse_strategy(name));
  return out;
}

// --out wins; otherwise $FOGCACHE_OUTPUT_DIR/<fallback>; otherwise stdout.
std::optional<fs::path> output_path(const std::string& out, const std::string& fallback) {
  if (!out.empty()) return fs::path(out);
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    fs::create_directories(dir);
    return fs::path(dir) / fallback;
  }
  return std::nullopt;
}

void emit(const std::string& text, const std::optional<fs::path>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path->string());
  out << text;
}

int run_verify(std::size_t graphs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;

  for (std::size_t i = 0; i < graphs; ++i) {
    const std::size_t n = 4 + rng() % 10;
    const double density = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    const NodeGraph g(n, edges);
    if (maximal_cliques(g) != brute_force_maximal_cliques(g)) {
      std::cerr << "clique mismatch on graph " << i << " (M=" << n << ")\n";
      ++failures;
    }
  }
  std::cout << "clique oracle: " << graphs - failures << "/" << graphs << " graphs match\n";

  std::size_t checked = 0, mwis_failures = 0;
  for (std::uint64_t s = 0; s < graphs; ++s) {
    ScenarioParams params;
    params.fap_count = 6 + static_cast<int>(rng() % 7);
    params.seed = seed * 1000 + s;
    const auto scenario = generate_scenario(params);
    const RunConfig config{CacheBudget{1 + static_cast<int>(rng() % 50)}, {350, 10}, {}, false};
    const auto greedy = solve(scenario, config.budget, {config.thresholds, Solver::Greedy, {}});
    const auto exact = solve(scenario, config.budget, {config.thresholds, Solver::Exact, {}});
    ++checked;
    if (greedy.solution.objective > exact.solution.objective * (1 + 1e-12) + 1e-9) {
      std::cerr << "greedy beats exact on seed " << params.seed << "\n";
      ++mwis_failures;
    }
  }
  std::cout << "decomposition + greedy<=exact: " << checked - mwis_failures << "/" << checked
            << " scenarios pass\n";
  return failures + mwis_failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-based cooperative caching optimizer for fog access points"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random scenario file");
  GenerateFlags gen_flags;
  std::string gen_out;
  add_generate_flags(*gen, gen_flags);
  gen->add_option("--out", gen_out, "scenario file to write");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve one scenario and print a CSV row per strategy");
  GenerateFlags solve_gen;
  RunFlags solve_run;
  std::string scenario_path, solve_out;
  bool generate = false, show_clusters = false;
  std::vector<std::string> solve_strategies{"proposed-greedy"};
  auto* scenario_opt = solve_cmd->add_option("--scenario", scenario_path, "scenario file");
  auto* generate_opt = solve_cmd->add_flag("--generate", generate, "generate the scenario from flags");
  scenario_opt->excludes(generate_opt);
  add_generate_flags(*solve_cmd, solve_gen);
  add_run_flags(*solve_cmd, solve_run, true);
  solve_cmd->add_option("--strategy", solve_strategies, "nocoop, lcd, ul, proposed-greedy, proposed-exact")
      ->delimiter(',');
  solve_cmd->add_option("--out", solve_out, "CSV output path");
  solve_cmd->add_flag("--show-clusters", show_clusters, "print chosen clusters to stderr");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep over generated scenarios");
  GenerateFlags sweep_gen;
  RunFlags sweep_run;
  std::string sweep_var = "k-over-f", sweep_out;
  std::vector<double> sweep_values;
  int reps = 1;
  std::vector<std::string> sweep_strategies{"proposed-greedy", "nocoop", "lcd", "ul"};
  add_generate_flags(*sweep_cmd, sweep_gen);
  add_run_flags(*sweep_cmd, sweep_run, true);
  sweep_cmd->add_option("--var", sweep_var, "k-over-f | gamma-d | gamma-l")->capture_default_str();
  sweep_cmd->add_option("--values", sweep_values, "comma-separated values (default grid per variable)")
      ->delimiter(',');
  sweep_cmd->add_option("--reps", reps, "replications (seeds seed..seed+reps-1)")->capture_default_str();
  sweep_cmd->add_option("--strategy", sweep_strategies, "strategies to run")->delimiter(',');
  sweep_cmd->add_option("--out", sweep_out, "CSV output path");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run oracle and identity checks on random instances");
  std::size_t verify_graphs = 200;
  std::uint64_t verify_seed = 1;
  verify_cmd->add_option("--graphs", verify_graphs, "random instances per check")->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const auto scenario = generate_scenario(resolve(gen_flags));
      const auto path = output_path(gen_out, "scenario.json");
      emit(format_scenario(scenario), path);
      return 0;
    }
    if (solve_cmd->parsed()) {
      if (scenario_path.empty() && !generate) {
        throw InvalidInput("solve needs --scenario PATH or --generate");
      }
      const Scenario scenario =
          generate ? generate_scenario(resolve(solve_gen)) : load_scenario(scenario_path);
      const RunConfig config = resolve(solve_run);
      std::vector<ResultRow> rows;
      for (Strategy s : parse_strategies(solve_strategies)) {
        rows.push_back(run_strategy(scenario, s, config));
      }
      if (show_clusters) {
        for (Strategy s : parse_strategies(solve_strategies)) {
          if (s != Strategy::ProposedGreedy && s != Strategy::ProposedExact) continue;
          const auto result = solve(scenario, config.budget,
                                    {config.thresholds,
                                     s == Strategy::ProposedGreedy ? Solver::Greedy : Solver::Exact,
                                     config.max_cluster_size});
          std::cerr << strategy_name(s) << ":";
          for (const auto& c : result.solution.clusters) std::cerr << ' ' << c.members.to_string();
          std::cerr << " | nonclustered " << result.solution.nonclustered.to_string() << '\n';
        }
      }
      emit(format_csv(rows), output_path(solve_out, "solve.csv"));
      return 0;
    }
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.variable = parse_sweep_variable(sweep_var);
      spec.values = sweep_values.empty() ? default_sweep_values(spec.variable) : sweep_values;
      spec.scenario = resolve(sweep_gen);
      spec.fixed = resolve(sweep_run);
      spec.strategies = parse_strategies(sweep_strategies);
      spec.replications = reps;
      emit(format_csv(run_sweep(spec)), output_path(sweep_out, "sweep.csv"));
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(verify_graphs, verify_seed);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
