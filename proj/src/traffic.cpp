#include "fogcache/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fogcache/errors.hpp"

namespace fogcache {

int CacheBudget::cluster_capacity(std::size_t cluster_size, int file_count) const {
  const long long diverse =
      std::min<long long>(static_cast<long long>(cluster_size) * K, file_count);
  if (policy == KnPolicy::FullDiversity) return static_cast<int>(diverse);
  return static_cast<int>(std::min<long long>(fixed_kn, diverse));
}

void CacheBudget::validate(int file_count) const {
  if (K < 1 || K > file_count) {
    throw InvalidInput("cache size K=" + std::to_string(K) +
                       " outside [1, " + std::to_string(file_count) + "]");
  }
  if (policy == KnPolicy::Fixed && fixed_kn < K) {
    throw InvalidInput("fixed K_n must be at least K");
  }
}

double offloaded_traffic_fap(double lambda, const PopularityVector& local, int K,
                             double file_size_bits) {
  if (K < 1 || static_cast<std::size_t>(K) > local.size()) {
    throw InvalidInput("offloaded_traffic_fap: K out of range");
  }
  return lambda * file_size_bits * local.top_mass(static_cast<std::size_t>(K));
}

namespace {

void check_capacity(std::size_t members, std::size_t files, int K, int kn) {
  const long long upper =
      std::min<long long>(static_cast<long long>(members) * K,
                          static_cast<long long>(files));
  if (K < 1 || kn < K || kn > upper) {
    throw InvalidInput("cluster capacity K_n=" + std::to_string(kn) +
                       " outside [" + std::to_string(K) + ", " +
                       std::to_string(upper) + "]");
  }
}

double member_lambda_sum(std::span<const FapIndex> members,
                         const LoadWeights& loads) {
  double total = 0;
  for (FapIndex m : members) total += loads.lambda(m);
  return total;
}

}  // namespace

double offloaded_traffic_cluster(std::span<const FapIndex> members,
                                 std::span<const PopularityVector> locals,
                                 const LoadWeights& loads, int K, int kn,
                                 double file_size_bits) {
  const auto pop = cluster_popularity(members, locals, loads);
  check_capacity(members.size(), pop.size(), K, kn);
  return member_lambda_sum(members, loads) * file_size_bits *
         pop.top_mass(static_cast<std::size_t>(kn));
}

double incremental_traffic(std::span<const FapIndex> members,
                           std::span<const PopularityVector> locals,
                           const LoadWeights& loads, const CacheBudget& budget,
                           double file_size_bits) {
  const auto pop = cluster_popularity(members, locals, loads);
  const int files = static_cast<int>(pop.size());
  budget.validate(files);
  const int kn = budget.cluster_capacity(members.size(), files);
  check_capacity(members.size(), pop.size(), budget.K, kn);
  const double cluster_mass = pop.top_mass(static_cast<std::size_t>(kn));
  double gain = 0;
  for (FapIndex m : members) {
    gain += loads.lambda(m) *
            (cluster_mass - locals[m].top_mass(static_cast<std::size_t>(budget.K)));
  }
  return gain * file_size_bits;
}

TrafficReport whole_traffic(std::span<const VertexSet> clusters,
                            const Scenario& scenario, const CacheBudget& budget) {
  const std::size_t fap_count = scenario.fap_count();
  const int files = scenario.catalog.file_count;
  const double bits = scenario.catalog.file_size_bits;
  budget.validate(files);

  std::vector<char> clustered(fap_count, 0);
  for (const auto& cluster : clusters) {
    if (cluster.empty()) throw InvalidInput("whole_traffic: empty cluster");
    for (FapIndex m : cluster) {
      if (m >= fap_count) throw InvalidInput("whole_traffic: F-AP index out of range");
      if (clustered[m]) {
        throw InvalidInput("whole_traffic: F-AP " + std::to_string(m + 1) +
                           " appears in more than one cluster");
      }
      clustered[m] = 1;
    }
  }

  const auto locals = scenario.locals();
  const auto loads = scenario.loads();

  TrafficReport report;
  report.per_fap.reserve(fap_count);
  for (std::size_t m = 0; m < fap_count; ++m) {
    report.per_fap.push_back(
        offloaded_traffic_fap(loads.lambda(m), locals[m], budget.K, bits));
    report.local_sum += report.per_fap.back();
  }

  double direct = 0;
  for (const auto& cluster : clusters) {
    const int kn = budget.cluster_capacity(cluster.size(), files);
    const double tc = offloaded_traffic_cluster(cluster.members(), locals, loads,
                                                budget.K, kn, bits);
    const double ti =
        incremental_traffic(cluster.members(), locals, loads, budget, bits);
    report.per_cluster.push_back(tc);
    report.per_cluster_incremental.push_back(ti);
    report.incremental += ti;
    direct += tc;
  }
  for (std::size_t m = 0; m < fap_count; ++m) {
    if (!clustered[m]) direct += report.per_fap[m];
  }
  report.whole = report.incremental + report.local_sum;
  report.whole_direct = direct;

  const double scale = std::max({std::abs(report.whole), std::abs(direct), 1e-300});
  if (std::abs(report.whole - direct) > kDecompositionTolerance * scale) {
    throw InvariantViolation("whole traffic decomposition mismatch: " +
                             std::to_string(report.whole) + " vs " +
                             std::to_string(direct));
  }
  return report;
}

std::vector<std::vector<std::size_t>> cluster_content_assignment(
    std::size_t member_count, const PopularityVector& cluster_pop, int kn) {
  if (member_count == 0) throw InvalidInput("content assignment: no members");
  if (kn < 0 || static_cast<std::size_t>(kn) > cluster_pop.size()) {
    throw InvalidInput("content assignment: K_n out of range");
  }
  std::vector<std::vector<std::size_t>> stored(member_count);
  const auto order = cluster_pop.ranking();
  for (std::size_t r = 0; r < static_cast<std::size_t>(kn); ++r) {
    stored[r % member_count].push_back(order[r]);
  }
  return stored;
}

}  // namespace fogcache
