#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <utility>
#include <vector>

#include "fogcache/scenario.hpp"
#include "fogcache/vertex_set.hpp"

namespace fogcache {

using VertexBits = boost::dynamic_bitset<>;
using Edge = std::pair<FapIndex, FapIndex>;  // first < second

struct PairMetrics {
  double distance = 0;   // meters
  double load_diff = 0;  // requests per second
};

PairMetrics pairwise_metrics(const FapNode& a, const FapNode& b);

/// Cooperation limits: pairs closer than gamma_d with load difference at
/// least gamma_l may share a cluster.
struct Thresholds {
  double gamma_d = 0;
  double gamma_l = 0;
};

/// Undirected simple graph over F-AP indices with bitset adjacency rows.
class NodeGraph {
 public:
  NodeGraph() = default;
  NodeGraph(std::size_t vertex_count, std::vector<Edge> edges,
            Thresholds thresholds = {});

  std::size_t vertex_count() const { return rows_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Thresholds& thresholds() const { return thresholds_; }

  bool adjacent(FapIndex a, FapIndex b) const { return rows_[a].test(b); }
  const VertexBits& neighbors(FapIndex v) const { return rows_[v]; }

 private:
  std::vector<Edge> edges_;
  std::vector<VertexBits> rows_;
  Thresholds thresholds_;
};

/// Edge (m, m') iff distance <= gamma_d and load difference >= gamma_l.
NodeGraph build_node_graph(std::span<const FapNode> faps, double gamma_d,
                           double gamma_l);

/// T_m = {m} plus every higher-indexed neighbor of m.
struct AdjacencyTable {
  FapIndex owner = 0;
  VertexSet entries;
  bool redundant = false;  // singleton, or contained in a lower owner's table
};

/// Every vertex's table in owner order, with the redundancy flag set.
std::vector<AdjacencyTable> forward_tables(const NodeGraph& g);

/// Non-redundant tables, largest first, ties by ascending owner.
std::vector<AdjacencyTable> adjacency_tables(const NodeGraph& g);

}  // namespace fogcache
