#include "fogcache/baselines.hpp"

#include <algorithm>

#include "doctest.h"
#include "fogcache/conflict.hpp"
#include "fogcache/experiments.hpp"
#include "test_support.hpp"

using namespace fogcache;
using doctest::Approx;

namespace {

double lambda_sum(const Scenario& s) {
  double total = 0;
  for (const auto& f : s.faps) total += f.lambda;
  return total;
}

void check_budget(const Placement& p, int K, int files) {
  for (const auto& stored : p.per_fap_files) {
    CHECK(stored.size() <= static_cast<std::size_t>(K));
    for (std::size_t f : stored) CHECK(f < static_cast<std::size_t>(files));
  }
}

}  // namespace

TEST_CASE("no cooperation") {
  const auto s = generate_scenario(ScenarioParams{});
  CHECK(baseline_nocoop(s, 50).report.whole ==
        Approx(lambda_sum(s) * s.catalog.file_size_bits).epsilon(1e-12));

  const auto pair = testing::two_fap_scenario();
  const auto r = baseline_nocoop(pair, 1);
  CHECK(r.report.whole == Approx(1.6));
  CHECK(r.report.incremental == 0.0);
  CHECK(r.placement.per_fap_files == std::vector<std::vector<std::size_t>>{{0}, {1}});

  const auto single = testing::make_scenario({{0.1, 0.6, 0.3}}, {4.0}, 2.0);
  CHECK(baseline_nocoop(single, 2).report.whole ==
        offloaded_traffic_fap(4.0, single.faps[0].local_pop, 2, 2.0));
}

TEST_CASE("largest content diversity reconstruction") {
  SUBCASE("local equals global reproduces the proposed traffic on the same clusters") {
    const std::vector<double> p{0.4, 0.25, 0.15, 0.1, 0.06, 0.04};
    const auto s = testing::make_scenario({p, p, p, p}, {5, 7, 9, 11}, 3.0,
                                          {{0, 0}, {10, 0}, {500, 500}, {900, 900}});
    const auto lcd = baseline_lcd(s, 2, 50);
    REQUIRE(lcd.clusters == std::vector<VertexSet>{{0, 1}, {2}, {3}});
    const auto proposed = whole_traffic(std::span<const VertexSet>(lcd.clusters), s, CacheBudget{2});
    CHECK(lcd.report.whole == Approx(proposed.whole).epsilon(1e-12));
    check_budget(lcd.placement, 2, 6);
    CHECK(lcd.placement.distinct_files(VertexSet{0, 1}) == 4);
  }
  SUBCASE("isolated F-AP caches the global top-K") {
    const auto s = testing::make_scenario({{0.7, 0.2, 0.1}, {0.1, 0.2, 0.7}}, {1.0, 3.0}, 1.0,
                                          {{0, 0}, {999, 999}});
    // Global: (0.25, 0.2, 0.55), so both F-APs store file 3.
    const auto lcd = baseline_lcd(s, 1, 10);
    CHECK(lcd.report.whole == Approx(1.0 * 0.1 + 3.0 * 0.7));
    CHECK(lcd.placement.per_fap_files == std::vector<std::vector<std::size_t>>{{2}, {2}});
    CHECK(lcd.report.incremental == Approx(lcd.report.whole - (0.7 + 3.0 * 0.7)));
  }
  SUBCASE("anti-correlated pair saturates diversity") {
    const auto s = testing::two_fap_scenario();
    const auto lcd = baseline_lcd(s, 1, 10);
    CHECK(lcd.report.whole == Approx(2.0));
    const auto proposed = solve(s, CacheBudget{1}, {{10, 0}, Solver::Greedy, {}});
    CHECK(lcd.report.whole == Approx(proposed.report.whole));
  }
}

TEST_CASE("uniform-local reconstruction") {
  const auto s = generate_scenario(ScenarioParams{});
  CHECK(baseline_ul(s, 50).report.whole ==
        Approx(lambda_sum(s) * s.catalog.file_size_bits).epsilon(1e-12));

  const auto two_files = testing::make_scenario({{0.9, 0.1}, {0.3, 0.7}}, {1, 1});
  const auto both = baseline_ul(two_files, 2);
  CHECK(both.report.whole == Approx(2.0));
  CHECK(both.placement.per_fap_files[0] == std::vector<std::size_t>{0, 1});

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto uniform = testing::make_scenario({{0.25, 0.25, 0.25, 0.25}}, {1.0});
    uniform.seed = seed;
    CHECK(baseline_ul(uniform, 2).report.whole == Approx(0.5));
  }
}

TEST_CASE("baseline properties across scenarios") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    ScenarioParams params;
    params.seed = seed;
    const auto s = generate_scenario(params);
    double previous_ul = 0, previous_lcd = 0;
    for (int K = 1; K <= 50; K += 7) {
      const auto nocoop = baseline_nocoop(s, K);
      const auto lcd = baseline_lcd(s, K, 300);
      const auto ul = baseline_ul(s, K);
      check_budget(nocoop.placement, K, 50);
      check_budget(lcd.placement, K, 50);
      check_budget(ul.placement, K, 50);

      const auto proposed = solve(s, CacheBudget{K}, {{300, 10}, Solver::Greedy, {}});
      CHECK(nocoop.report.whole == proposed.report.local_sum);
      CHECK(proposed.report.whole >= nocoop.report.whole);
      CHECK(ul.report.whole <= nocoop.report.whole * (1 + 1e-12));

      CHECK(ul.report.whole >= previous_ul);
      CHECK(lcd.report.whole >= previous_lcd * (1 - 1e-12));
      previous_ul = ul.report.whole;
      previous_lcd = lcd.report.whole;
    }
  }
}
