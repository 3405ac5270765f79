#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fogcache/cliques.hpp"
#include "fogcache/nodegraph.hpp"
#include "fogcache/scenario.hpp"
#include "fogcache/traffic.hpp"
#include "fogcache/vertex_set.hpp"

namespace fogcache {

/// Largest |H| the branch-and-bound oracle accepts.
inline constexpr std::size_t kExactMwisGuard = 25;

/// Largest F-AP count the subset dynamic program accepts.
inline constexpr std::size_t kPackingFapGuard = 20;

/// A complete subgraph of the node graph offered as a cooperation cluster.
struct CandidateCluster {
  VertexSet members;
  int kn = 0;         // distinct files the cluster caches
  double weight = 0;  // incremental offloaded traffic, bits/s
};

/// Conflict graph over candidate clusters: vertices conflict when their
/// clusters share an F-AP. Can also be built from bare weights and edges for
/// abstract instances, in which case clusters() is empty.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::vector<double> weights, std::vector<Edge> conflicts);
  WeightedGraph(std::vector<CandidateCluster> clusters, std::size_t fap_count);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t n) const { return weights_[n]; }
  std::span<const double> weights() const { return weights_; }
  const std::vector<Edge>& conflicts() const { return conflicts_; }
  const std::vector<std::size_t>& neighbors(std::size_t n) const { return adjacency_[n]; }

  bool has_clusters() const { return !clusters_.empty() || weights_.empty(); }
  const std::vector<CandidateCluster>& clusters() const { return clusters_; }
  std::size_t fap_count() const { return fap_count_; }

 private:
  void index_conflicts();

  std::vector<double> weights_;
  std::vector<Edge> conflicts_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<CandidateCluster> clusters_;
  std::size_t fap_count_ = 0;
};

/// Disjoint chosen clusters and the F-APs left on their own.
struct ClusteringSolution {
  std::vector<std::size_t> chosen;  // indices into H, ascending
  std::vector<std::uint8_t> indicator;
  std::vector<CandidateCluster> clusters;
  VertexSet nonclustered;
  double objective = 0;  // sum of chosen weights, ascending index order

  std::vector<VertexSet> cluster_sets() const;
};

/// Builds a solution from independent vertex indices; throws
/// InvariantViolation if two chosen vertices conflict.
ClusteringSolution make_solution(const WeightedGraph& g, std::vector<std::size_t> chosen);

/// Candidates in canonical order weighted by incremental traffic.
WeightedGraph build_weighted_graph(std::span<const VertexSet> candidates,
                                   const Scenario& scenario, const CacheBudget& budget);

/// Restart-greedy max-weight independent set: one run seeded from every
/// vertex, each run repeatedly taking the heaviest remaining vertex (ties to
/// the lowest index). The first best-scoring run wins.
ClusteringSolution greedy_mwis(const WeightedGraph& g);

/// Exact max-weight independent set by branch and bound; among optima the
/// lexicographically smallest indicator vector is returned.
ClusteringSolution exact_mwis(const WeightedGraph& g, std::size_t guard = kExactMwisGuard);

/// Exact optimum by dynamic programming over F-AP subsets. Needs a graph built
/// from clusters (conflict == shared F-AP) over at most kPackingFapGuard F-APs.
ClusteringSolution exact_cluster_packing(const WeightedGraph& g);

enum class Solver { Greedy, Exact };

struct SolveOptions {
  Thresholds thresholds;
  Solver solver = Solver::Greedy;
  std::optional<std::size_t> max_cluster_size;
};

struct SolveResult {
  NodeGraph graph;
  CliqueCatalog cliques;
  WeightedGraph weighted;
  ClusteringSolution solution;
  TrafficReport report;
  std::size_t surviving_tables = 0;
  double mean_table_size = 0;  // over all forward tables
};

/// Node graph, cliques, conflict graph, the chosen solver and the traffic
/// report for one scenario.
SolveResult solve(const Scenario& scenario, const CacheBudget& budget,
                  const SolveOptions& options);

TrafficReport whole_traffic(const ClusteringSolution& solution, const Scenario& scenario,
                            const CacheBudget& budget);

}  // namespace fogcache
