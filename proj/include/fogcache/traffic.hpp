#pragma once

#include <span>
#include <vector>

#include "fogcache/popularity.hpp"
#include "fogcache/scenario.hpp"
#include "fogcache/vertex_set.hpp"

namespace fogcache {

/// Relative tolerance for the whole-traffic decomposition check.
inline constexpr double kDecompositionTolerance = 1e-9;

enum class KnPolicy {
  FullDiversity,  // K_n = min(S_n K, F)
  Fixed,          // K_n = min(v, S_n K, F) with v >= K
};

/// Per-F-AP cache size K and how many distinct files a cluster holds.
struct CacheBudget {
  int K = 1;
  KnPolicy policy = KnPolicy::FullDiversity;
  int fixed_kn = 0;  // v, only read under KnPolicy::Fixed

  /// K_n for a cluster of `cluster_size` F-APs over a catalog of `file_count`.
  int cluster_capacity(std::size_t cluster_size, int file_count) const;

  /// Throws InvalidInput unless 1 <= K <= F (and v >= K under Fixed).
  void validate(int file_count) const;
};

/// Offloaded traffic bookkeeping, all values in bits per second.
struct TrafficReport {
  std::vector<double> per_fap;                  // T_m for every F-AP
  std::vector<double> per_cluster;              // T_n^c per chosen cluster
  std::vector<double> per_cluster_incremental;  // T_n^i per chosen cluster
  double local_sum = 0;                         // sum_m T_m over all F-APs
  double incremental = 0;                       // T^i
  double whole = 0;         // T = T^i + sum_m T_m
  double whole_direct = 0;  // sum_n T_n^c + sum over nonclustered T_m
};

/// T_m = lambda * L * (mass of the K most popular local files).
double offloaded_traffic_fap(double lambda, const PopularityVector& local, int K,
                             double file_size_bits);

/// T_n^c = (sum of member lambdas) * L * (top-K_n mass of cluster popularity).
/// Requires K <= K_n <= min(S_n K, F).
double offloaded_traffic_cluster(std::span<const FapIndex> members,
                                 std::span<const PopularityVector> locals,
                                 const LoadWeights& loads, int K, int kn,
                                 double file_size_bits);

/// T_n^i = sum_m lambda_m (top-K_n cluster mass - top-K local mass) L.
double incremental_traffic(std::span<const FapIndex> members,
                           std::span<const PopularityVector> locals,
                           const LoadWeights& loads, const CacheBudget& budget,
                           double file_size_bits);

/// Fills every TrafficReport field for a set of disjoint clusters; F-APs not in
/// any cluster are nonclustered. Both routes to T are computed and must agree
/// within kDecompositionTolerance, otherwise InvariantViolation is thrown.
TrafficReport whole_traffic(std::span<const VertexSet> clusters,
                            const Scenario& scenario, const CacheBudget& budget);

/// Which member stores which of the cluster's K_n files: round-robin over
/// descending cluster popularity. Returned lists hold 0-based file indices,
/// one list per member in member order.
std::vector<std::vector<std::size_t>> cluster_content_assignment(
    std::size_t member_count, const PopularityVector& cluster_pop, int kn);

}  // namespace fogcache
