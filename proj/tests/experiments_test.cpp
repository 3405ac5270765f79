#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>

#include "fogcache/errors.hpp"
#include "fogcache/experiments.hpp"
#include "fogcache/scenario_io.hpp"
#include "json.hpp"

using namespace fogcache;

namespace {

ScenarioParams small_params(int m, std::uint64_t seed) {
  ScenarioParams p;
  p.fap_count = m;
  p.seed = seed;
  return p;
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
  Scenario a = generate_scenario(small_params(13, 5));
  Scenario b = generate_scenario(small_params(13, 5));
  Scenario c = generate_scenario(small_params(13, 6));
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(a.faps.size() == 13);
  for (const auto& f : a.faps) {
    CHECK(f.position.x >= 0);
    CHECK(f.position.x <= a.region.width);
    CHECK(f.lambda >= a.lambda_range.min);
    CHECK(f.lambda <= a.lambda_range.max);
  }
}

TEST_CASE("single F-AP scenario has no edges and falls back to local caching") {
  Scenario s = generate_scenario(small_params(1, 3));
  RunConfig cfg;
  ResultRow g = run_strategy(s, Strategy::ProposedGreedy, cfg);
  ResultRow n = run_strategy(s, Strategy::NoCoop, cfg);
  CHECK(g.num_candidates == 0);
  CHECK(g.num_clusters == 0);
  CHECK(g.num_nonclustered == 1);
  CHECK(g.incremental_traffic_bps == 0.0);
  CHECK(g.whole_traffic_bps == n.whole_traffic_bps);
}

TEST_CASE("default seed-1 node graph is neither empty nor complete") {
  Scenario s = generate_scenario(ScenarioParams{});
  SolveOptions opt;
  opt.thresholds = RunConfig{}.thresholds;
  SolveResult r = solve(s, RunConfig{}.budget, opt);
  std::size_t m = s.faps.size();
  CHECK(r.graph.edges().size() > 0);
  CHECK(r.graph.edges().size() < m * (m - 1) / 2);
}

TEST_CASE("scenario JSON round trip is exact") {
  Scenario s = generate_scenario(small_params(7, 11));
  Scenario back = parse_scenario(format_scenario(s));
  CHECK(back == s);
  CHECK(format_scenario(back) == format_scenario(s));
}

TEST_CASE("scenario with a bad popularity vector names the F-AP") {
  Scenario s = generate_scenario(small_params(3, 2));
  auto j = nlohmann::json::parse(format_scenario(s));
  auto& pop = j["faps"][1]["popularity"];
  for (auto& v : pop) v = v.get<double>() * 0.5;
  try {
    parse_scenario(j.dump());
    FAIL("expected rejection");
  } catch (const InvalidInput& e) {
    std::string msg = e.what();
    CHECK(msg.find("faps[1]") != std::string::npos);
    CHECK(msg.find("2") != std::string::npos);
  }
}

TEST_CASE("scenario missing a section is a schema error") {
  Scenario s = generate_scenario(small_params(3, 2));
  auto j = nlohmann::json::parse(format_scenario(s));
  j.erase("region");
  try {
    parse_scenario(j.dump());
    FAIL("expected rejection");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("region") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_scenario("{not json"), InvalidInput);
}

TEST_CASE("K/F sweep covers the grid and proposed never loses to local caching") {
  SweepSpec spec;
  spec.variable = SweepVariable::KOverF;
  spec.values = default_sweep_values(SweepVariable::KOverF);
  spec.strategies = {Strategy::ProposedGreedy, Strategy::NoCoop};
  spec.replications = 2;
  auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 9 * 2 * 2);
  std::map<std::pair<int, std::uint64_t>, std::map<Strategy, double>> by;
  for (const auto& r : rows) by[{r.K, r.seed}][r.strategy] = r.whole_traffic_bps;
  for (const auto& [key, m] : by) {
    CHECK(m.at(Strategy::ProposedGreedy) >= m.at(Strategy::NoCoop) * (1 - 1e-12));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].K <= rows[i].K);
}

TEST_CASE("exact incremental traffic does not grow with the load threshold") {
  SweepSpec spec;
  spec.variable = SweepVariable::GammaL;
  spec.values = default_sweep_values(SweepVariable::GammaL);
  spec.scenario.fap_count = 8;
  spec.fixed.thresholds.gamma_d = 400;
  spec.strategies = {Strategy::ProposedExact};
  spec.replications = 3;
  auto rows = run_sweep(spec);
  std::map<std::uint64_t, std::vector<double>> per_seed;
  for (const auto& r : rows) per_seed[r.seed].push_back(r.incremental_traffic_bps);
  for (const auto& [seed, v] : per_seed) {
    REQUIRE(v.size() == 4);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] <= v[i - 1] * (1 + 1e-9));
  }
}

TEST_CASE("sweep specs are validated") {
  SweepSpec spec;
  spec.values = {0.1, 0.2};
  spec.strategies = {};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.strategies = {Strategy::NoCoop};
  CHECK_NOTHROW(spec.validate());
  spec.values = {0.2, 0.2};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.values = {0.3, 0.2};
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  spec.values = {0.1};
  spec.replications = 0;
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
}

TEST_CASE("CSV output is deterministic") {
  SweepSpec spec;
  spec.values = {0.2, 0.5};
  spec.strategies = {Strategy::ProposedGreedy, Strategy::Lcd, Strategy::UniformLocal};
  std::string a = format_csv(run_sweep(spec));
  std::string b = format_csv(run_sweep(spec));
  CHECK(a == b);
  CHECK(a.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 2 * 3);
}

TEST_CASE("format_double round trips") {
  for (double v : {0.0, 1.0, 0.1, 2e8, 1.0 / 3.0, 123456789.125}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("names parse back") {
  for (auto s : {Strategy::NoCoop, Strategy::Lcd, Strategy::UniformLocal,
                 Strategy::ProposedGreedy, Strategy::ProposedExact}) {
    CHECK(parse_strategy(strategy_name(s)) == s);
  }
  for (auto v : {SweepVariable::KOverF, SweepVariable::GammaD, SweepVariable::GammaL}) {
    CHECK(parse_sweep_variable(sweep_variable_name(v)) == v);
  }
  CHECK_THROWS_AS(parse_strategy("bogus"), InvalidInput);
  CHECK_THROWS_AS(parse_sweep_variable("bogus"), InvalidInput);
}
