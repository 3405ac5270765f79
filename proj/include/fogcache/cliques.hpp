#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fogcache/nodegraph.hpp"
#include "fogcache/vertex_set.hpp"

namespace fogcache {

/// Largest graph the exhaustive clique oracle accepts.
inline constexpr std::size_t kCliqueOracleVertexGuard = 20;

/// Upper bound on |H| before all_complete_subgraphs refuses to expand.
inline constexpr std::size_t kCandidateLimit = 2'000'000;

/// Maximal cliques plus every complete subgraph they contain. Both vectors
/// are sorted and duplicate free.
struct CliqueCatalog {
  std::vector<VertexSet> maximal;      // P entries
  std::vector<VertexSet> all_cliques;  // H, N' entries, each of size >= 2
};

/// Maximal cliques with at least one edge, found by splitting each
/// non-redundant adjacency table until every working table is complete.
std::vector<VertexSet> maximal_cliques(const NodeGraph& g);

/// Reference enumeration over all 2^M vertex subsets. Throws InvalidInput
/// when M exceeds kCliqueOracleVertexGuard.
std::vector<VertexSet> brute_force_maximal_cliques(const NodeGraph& g);

/// Every subset of size >= 2 (and <= max_cluster_size when set) of the given
/// cliques, deduplicated.
std::vector<VertexSet> all_complete_subgraphs(
    std::span<const VertexSet> maximal,
    std::optional<std::size_t> max_cluster_size = std::nullopt);

CliqueCatalog enumerate_cliques(
    const NodeGraph& g, std::optional<std::size_t> max_cluster_size = std::nullopt);

/// True when every pair of members is adjacent in g.
bool is_complete(const NodeGraph& g, const VertexSet& members);

}  // namespace fogcache
