#include "fogcache/traffic.hpp"

#include <random>

#include "doctest.h"
#include "fogcache/errors.hpp"
#include "test_support.hpp"

using namespace fogcache;
using doctest::Approx;

namespace {

bool close(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("per-F-AP offloaded traffic") {
  CHECK(offloaded_traffic_fap(1.0, zipf_popularity(4, 0.0), 4, 1.0) == Approx(1.0));
  CHECK(offloaded_traffic_fap(2.0, PopularityVector({0.5, 0.3, 0.2}), 1, 10.0) == Approx(10.0));
  CHECK(offloaded_traffic_fap(0.0, zipf_popularity(10, 0.6), 3, 200e6) == 0.0);
  CHECK_THROWS_AS(offloaded_traffic_fap(1.0, zipf_popularity(4, 0.0), 0, 1.0), InvalidInput);
  CHECK_THROWS_AS(offloaded_traffic_fap(1.0, zipf_popularity(4, 0.0), 5, 1.0), InvalidInput);
}

TEST_CASE("cluster capacity policies") {
  const CacheBudget full{3};
  CHECK(full.cluster_capacity(1, 50) == 3);
  CHECK(full.cluster_capacity(4, 50) == 12);
  CHECK(full.cluster_capacity(4, 10) == 10);

  const CacheBudget fixed{3, KnPolicy::Fixed, 5};
  CHECK(fixed.cluster_capacity(1, 50) == 3);
  CHECK(fixed.cluster_capacity(2, 50) == 5);
  CHECK(fixed.cluster_capacity(3, 4) == 4);

  CHECK_THROWS_AS(CacheBudget{0}.validate(10), InvalidInput);
  CHECK_THROWS_AS(CacheBudget{11}.validate(10), InvalidInput);
  CHECK_THROWS_AS((CacheBudget{3, KnPolicy::Fixed, 2}.validate(10)), InvalidInput);
}

TEST_CASE("cluster offloaded traffic") {
  const auto s = testing::two_fap_scenario();
  const auto locals = s.locals();
  const auto loads = s.loads();
  const std::vector<FapIndex> pair{0, 1};
  const std::vector<FapIndex> first{0};

  CHECK(offloaded_traffic_cluster(first, locals, loads, 1, 1, 1.0) ==
        offloaded_traffic_fap(1.0, locals[0], 1, 1.0));
  CHECK(offloaded_traffic_cluster(pair, locals, loads, 1, 2, 1.0) == Approx(2.0));
  // K_n = F always offloads every request.
  CHECK(offloaded_traffic_cluster(pair, locals, loads, 1, 2, 7.0) == Approx(14.0));
  CHECK_THROWS_AS(offloaded_traffic_cluster(pair, locals, loads, 1, 3, 1.0), InvalidInput);
  CHECK_THROWS_AS(offloaded_traffic_cluster(first, locals, loads, 1, 2, 1.0), InvalidInput);
}

TEST_CASE("incremental traffic") {
  const auto s = testing::two_fap_scenario();
  const auto locals = s.locals();
  const auto loads = s.loads();

  CHECK(incremental_traffic(std::vector<FapIndex>{1}, locals, loads, CacheBudget{1}, 1.0) == 0.0);
  CHECK(incremental_traffic(std::vector<FapIndex>{0, 1}, locals, loads, CacheBudget{1}, 1.0) ==
        Approx(0.4));

  const auto same = testing::make_scenario({{0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}}, {2.0, 3.0});
  const CacheBudget fixed{1, KnPolicy::Fixed, 1};
  CHECK(std::abs(incremental_traffic(std::vector<FapIndex>{0, 1}, same.locals(), same.loads(),
                                     fixed, 1.0)) < 1e-15);
  CHECK_THROWS_AS(incremental_traffic(std::vector<FapIndex>{}, locals, loads, CacheBudget{1}, 1.0),
                  InvalidInput);
}

TEST_CASE("whole traffic") {
  const auto s = testing::two_fap_scenario();
  SUBCASE("nobody clustered") {
    const auto r = whole_traffic(std::span<const VertexSet>{}, s, CacheBudget{1});
    CHECK(r.incremental == 0.0);
    CHECK(r.whole == Approx(1.6));
    CHECK(r.whole == r.local_sum);
    CHECK(r.per_fap == std::vector<double>{0.8, 0.8});
  }
  SUBCASE("both F-APs in one cluster") {
    const std::vector<VertexSet> clusters{{0, 1}};
    const auto r = whole_traffic(clusters, s, CacheBudget{1});
    CHECK(r.whole == Approx(2.0));
    CHECK(r.whole_direct == Approx(2.0));
    CHECK(r.incremental == Approx(0.4));
    CHECK(r.local_sum == Approx(1.6));
    CHECK(r.per_cluster.size() == 1);
  }
  SUBCASE("identical locals with K_n = K gain nothing") {
    const auto same = testing::make_scenario({{0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}},
                                             {1.0, 2.0, 3.0});
    const std::vector<VertexSet> clusters{{0, 1, 2}};
    const auto r = whole_traffic(clusters, same, CacheBudget{1, KnPolicy::Fixed, 1});
    CHECK(std::abs(r.incremental) < 1e-12);
    CHECK(r.whole == Approx(r.local_sum));
  }
  SUBCASE("overlapping clusters are rejected") {
    const auto three = testing::make_scenario({{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}}, {1, 1, 1});
    const std::vector<VertexSet> clusters{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(whole_traffic(clusters, three, CacheBudget{1}), InvalidInput);
  }
}

TEST_CASE("content assignment is round-robin over cluster ranking") {
  const PopularityVector pop({0.1, 0.4, 0.2, 0.3});
  const auto stored = cluster_content_assignment(2, pop, 3);
  REQUIRE(stored.size() == 2);
  CHECK(stored[0] == std::vector<std::size_t>{1, 2});
  CHECK(stored[1] == std::vector<std::size_t>{3});
}

TEST_CASE("traffic properties on random instances") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t faps = 2 + rng() % 6;
    const std::size_t files = 2 + rng() % 25;
    std::vector<std::vector<double>> locals;
    std::vector<double> lambdas;
    for (std::size_t m = 0; m < faps; ++m) {
      locals.push_back(testing::random_probs(files, rng));
      lambdas.push_back(10.0 + static_cast<double>(rng() % 100));
    }
    const double bits = 1e6;
    const auto s = testing::make_scenario(locals, lambdas, bits);

    // Random disjoint clustering.
    std::vector<VertexSet> clusters;
    std::vector<FapIndex> pending;
    for (FapIndex m = 0; m < faps; ++m) {
      pending.push_back(m);
      if (rng() % 3 == 0) {
        clusters.emplace_back(pending);
        pending.clear();
      }
    }
    const int K = 1 + static_cast<int>(rng() % files);
    const CacheBudget budget{K};

    const auto r = whole_traffic(clusters, s, budget);
    CHECK(close(r.whole, r.whole_direct, 1e-9));
    for (double ti : r.per_cluster_incremental) CHECK(ti >= -1e-12 * r.whole);
    for (double tm : r.per_fap) CHECK(tm >= 0);

    // Monotone in K for the same clustering.
    if (K < static_cast<int>(files)) {
      const auto bigger = whole_traffic(clusters, s, CacheBudget{K + 1});
      CHECK(bigger.whole >= r.whole * (1 - 1e-12));
    }

    // Scaling L or every lambda scales every field.
    const double c = 3.5;
    auto scaled_lambdas = lambdas;
    for (double& l : scaled_lambdas) l *= c;
    const auto by_l = whole_traffic(clusters, testing::make_scenario(locals, lambdas, bits * c), budget);
    const auto by_lambda = whole_traffic(clusters, testing::make_scenario(locals, scaled_lambdas, bits), budget);
    for (const auto* other : {&by_l, &by_lambda}) {
      CHECK(close(other->whole, c * r.whole));
      CHECK(close(other->incremental, c * r.incremental, 1e-9));
      CHECK(close(other->local_sum, c * r.local_sum));
      for (std::size_t i = 0; i < r.per_cluster.size(); ++i) {
        CHECK(close(other->per_cluster[i], c * r.per_cluster[i]));
      }
    }
  }
}
