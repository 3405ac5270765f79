#include "fogcache/nodegraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fogcache/errors.hpp"

namespace fogcache {

PairMetrics pairwise_metrics(const FapNode& a, const FapNode& b) {
  return {std::hypot(a.position.x - b.position.x, a.position.y - b.position.y),
          std::abs(a.lambda - b.lambda)};
}

NodeGraph::NodeGraph(std::size_t vertex_count, std::vector<Edge> edges,
                     Thresholds thresholds)
    : rows_(vertex_count, VertexBits(vertex_count)), thresholds_(thresholds) {
  for (auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("node graph: self-loop on vertex " + std::to_string(a + 1));
    if (a >= vertex_count || b >= vertex_count) {
      throw InvalidInput("node graph: edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
    rows_[a].set(b);
    rows_[b].set(a);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

NodeGraph build_node_graph(std::span<const FapNode> faps, double gamma_d,
                           double gamma_l) {
  if (faps.empty()) throw InvalidInput("node graph: no F-APs");
  if (!(gamma_d >= 0) || !(gamma_l >= 0)) {
    throw InvalidInput("node graph: thresholds must be nonnegative");
  }
  std::set<int> ids;
  for (const auto& fap : faps) {
    if (!ids.insert(fap.id).second) {
      throw InvalidInput("node graph: duplicate F-AP id " + std::to_string(fap.id));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < faps.size(); ++a) {
    for (std::size_t b = a + 1; b < faps.size(); ++b) {
      const auto metrics = pairwise_metrics(faps[a], faps[b]);
      if (metrics.distance <= gamma_d && metrics.load_diff >= gamma_l) {
        edges.emplace_back(a, b);
      }
    }
  }
  return NodeGraph(faps.size(), std::move(edges), {gamma_d, gamma_l});
}

std::vector<AdjacencyTable> forward_tables(const NodeGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<AdjacencyTable> tables(n);
  for (FapIndex m = 0; m < n; ++m) {
    std::vector<FapIndex> entries{m};
    const auto& row = g.neighbors(m);
    for (auto v = row.find_next(m); v != VertexBits::npos; v = row.find_next(v)) {
      entries.push_back(v);
    }
    tables[m].owner = m;
    tables[m].entries = VertexSet(std::move(entries));
    tables[m].redundant = tables[m].entries.size() == 1;
    for (FapIndex earlier = 0; earlier < m && !tables[m].redundant; ++earlier) {
      tables[m].redundant = tables[m].entries.is_subset_of(tables[earlier].entries);
    }
  }
  return tables;
}

std::vector<AdjacencyTable> adjacency_tables(const NodeGraph& g) {
  auto tables = forward_tables(g);
  std::erase_if(tables, [](const AdjacencyTable& t) { return t.redundant; });
  std::stable_sort(tables.begin(), tables.end(),
                   [](const AdjacencyTable& a, const AdjacencyTable& b) {
                     return a.entries.size() > b.entries.size();
                   });
  return tables;
}

}  // namespace fogcache
