#include "fogcache/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fogcache/errors.hpp"
#include "fogcache/nodegraph.hpp"
#include "fogcache/random.hpp"

namespace fogcache {

namespace {

constexpr std::uint64_t kUniformLocalStream = 0x554c;  // "UL"

std::vector<VertexSet> connected_components(const NodeGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : g.edges()) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<FapIndex>> groups(n);
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.emplace_back(std::move(grp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> top_files(const PopularityVector& pop, std::size_t k) {
  auto order = pop.ranking();
  order.resize(k);
  return order;
}

// Fills per_fap / local_sum from the per-F-AP optimum and derives T^i.
void finish_report(TrafficReport& report, const Scenario& scenario, int K, double whole) {
  const auto locals = scenario.locals();
  const auto loads = scenario.loads();
  const double bits = scenario.catalog.file_size_bits;
  report.per_fap.clear();
  report.local_sum = 0;
  for (std::size_t m = 0; m < scenario.fap_count(); ++m) {
    report.per_fap.push_back(offloaded_traffic_fap(loads.lambda(m), locals[m], K, bits));
    report.local_sum += report.per_fap.back();
  }
  report.whole = whole;
  report.whole_direct = whole;
  report.incremental = whole - report.local_sum;
}

}  // namespace

std::size_t Placement::distinct_files(const VertexSet& faps) const {
  std::set<std::size_t> files;
  for (FapIndex m : faps) files.insert(per_fap_files[m].begin(), per_fap_files[m].end());
  return files.size();
}

BaselineResult baseline_nocoop(const Scenario& scenario, int K) {
  CacheBudget budget{K};
  budget.validate(scenario.catalog.file_count);
  BaselineResult result;
  for (const auto& fap : scenario.faps) {
    auto files = top_files(fap.local_pop, static_cast<std::size_t>(K));
    std::sort(files.begin(), files.end());
    result.placement.per_fap_files.push_back(std::move(files));
  }
  result.report = whole_traffic(std::span<const VertexSet>{}, scenario, budget);
  return result;
}

BaselineResult baseline_lcd(const Scenario& scenario, int K, double gamma_d) {
  const int files = scenario.catalog.file_count;
  CacheBudget budget{K};
  budget.validate(files);
  const auto locals = scenario.locals();
  const auto loads = scenario.loads();
  const double bits = scenario.catalog.file_size_bits;
  const auto global = global_popularity(locals, loads);

  // Load difference is never negative, so gamma_l = 0 leaves distance alone.
  const auto distance_graph = build_node_graph(scenario.faps, gamma_d, 0.0);

  BaselineResult result;
  result.placement.per_fap_files.resize(scenario.fap_count());
  result.clusters = connected_components(distance_graph);
  double whole = 0;
  for (const auto& cluster : result.clusters) {
    const int kn = budget.cluster_capacity(cluster.size(), files);
    const auto stored = cluster_content_assignment(cluster.size(), global, kn);
    std::vector<std::size_t> cluster_files;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      auto mine = stored[i];
      cluster_files.insert(cluster_files.end(), mine.begin(), mine.end());
      std::sort(mine.begin(), mine.end());
      result.placement.per_fap_files[cluster.members()[i]] = std::move(mine);
    }
    const auto pop = cluster_popularity(cluster.members(), locals, loads);
    double lambda_sum = 0;
    for (FapIndex m : cluster) lambda_sum += loads.lambda(m);
    const double traffic = lambda_sum * bits * pop.mass_of(cluster_files);
    result.report.per_cluster.push_back(traffic);
    whole += traffic;
  }
  finish_report(result.report, scenario, K, whole);
  result.report.per_cluster_incremental.clear();
  for (std::size_t c = 0; c < result.clusters.size(); ++c) {
    double members_local = 0;
    for (FapIndex m : result.clusters[c]) members_local += result.report.per_fap[m];
    result.report.per_cluster_incremental.push_back(result.report.per_cluster[c] -
                                                    members_local);
  }
  return result;
}

BaselineResult baseline_ul(const Scenario& scenario, int K) {
  const int files = scenario.catalog.file_count;
  CacheBudget{K}.validate(files);
  const double bits = scenario.catalog.file_size_bits;
  const std::size_t top_slots = static_cast<std::size_t>((K + 1) / 2);
  const std::size_t random_slots = static_cast<std::size_t>(K / 2);

  BaselineResult result;
  double whole = 0;
  for (std::size_t m = 0; m < scenario.fap_count(); ++m) {
    const auto& fap = scenario.faps[m];
    auto chosen = top_files(fap.local_pop, top_slots);
    std::vector<char> taken(static_cast<std::size_t>(files), 0);
    for (std::size_t f : chosen) taken[f] = 1;

    // A fixed random order per F-AP keeps the stored set nested as K grows.
    std::vector<std::size_t> order(static_cast<std::size_t>(files));
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(derive_seed(scenario.seed, kUniformLocalStream), m));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[uniform_index(rng, i)]);
    }
    std::size_t filled = 0;
    for (std::size_t f : order) {
      if (filled == random_slots) break;
      if (taken[f]) continue;
      taken[f] = 1;
      chosen.push_back(f);
      ++filled;
    }
    std::sort(chosen.begin(), chosen.end());
    whole += fap.lambda * bits * fap.local_pop.mass_of(chosen);
    result.placement.per_fap_files.push_back(std::move(chosen));
  }
  finish_report(result.report, scenario, K, whole);
  return result;
}

}  // namespace fogcache
