#pragma once

#include <cstddef>
#include <vector>

#include "fogcache/scenario.hpp"
#include "fogcache/traffic.hpp"
#include "fogcache/vertex_set.hpp"

namespace fogcache {

/// Which files each F-AP stores (0-based file indices, ascending).
struct Placement {
  std::vector<std::vector<std::size_t>> per_fap_files;

  /// Distinct files held across a set of F-APs.
  std::size_t distinct_files(const VertexSet& faps) const;
};

/// Reference strategies. Their reports use T_m from the per-F-AP optimum, so
/// `incremental` (T - sum_m T_m) is negative when a strategy offloads less
/// than independent local caching would.
struct BaselineResult {
  Placement placement;
  TrafficReport report;
  std::vector<VertexSet> clusters;  // empty for strategies without clustering
};

/// Every F-AP caches its own top-K files.
BaselineResult baseline_nocoop(const Scenario& scenario, int K);

/// Largest-content-diversity reconstruction: clusters are the connected
/// components of the distance-only graph, each caching the top-min(S_n K, F)
/// files of global popularity spread round-robin over its members.
BaselineResult baseline_lcd(const Scenario& scenario, int K, double gamma_d);

/// Uniform-local reconstruction: ceil(K/2) slots hold the F-AP's top local
/// files, the other floor(K/2) are filled from a seeded random order over
/// the catalog. No clustering.
BaselineResult baseline_ul(const Scenario& scenario, int K);

}  // namespace fogcache
