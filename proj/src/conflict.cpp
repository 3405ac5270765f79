#include "fogcache/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fogcache/errors.hpp"

namespace fogcache {

namespace {

// Incremental traffic of a cluster whose true value is zero can come out a
// few ulps negative; such values are snapped to zero.
constexpr double kWeightRoundingTolerance = 1e-12;

void require_nonnegative(const WeightedGraph& g) {
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g.weight(n) < 0) {
      throw InvalidInput("max-weight independent set: vertex " + std::to_string(n) +
                         " has negative weight");
    }
  }
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<double> weights, std::vector<Edge> conflicts)
    : weights_(std::move(weights)), conflicts_(std::move(conflicts)) {
  for (auto& [a, b] : conflicts_) {
    if (a == b || a >= weights_.size() || b >= weights_.size()) {
      throw InvalidInput("weighted graph: invalid conflict edge");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(conflicts_.begin(), conflicts_.end());
  conflicts_.erase(std::unique(conflicts_.begin(), conflicts_.end()), conflicts_.end());
  index_conflicts();
}

WeightedGraph::WeightedGraph(std::vector<CandidateCluster> clusters, std::size_t fap_count)
    : clusters_(std::move(clusters)), fap_count_(fap_count) {
  std::sort(clusters_.begin(), clusters_.end(),
            [](const CandidateCluster& a, const CandidateCluster& b) {
              return a.members < b.members;
            });
  weights_.reserve(clusters_.size());
  for (const auto& c : clusters_) {
    if (c.members.empty() || c.members.back() >= fap_count_) {
      throw InvalidInput("weighted graph: cluster " + c.members.to_string() +
                         " references unknown F-APs");
    }
    weights_.push_back(c.weight);
  }
  // Bucket clusters by F-AP so only clusters sharing a member are compared.
  std::vector<std::vector<std::size_t>> by_fap(fap_count_);
  for (std::size_t n = 0; n < clusters_.size(); ++n) {
    for (FapIndex m : clusters_[n].members) by_fap[m].push_back(n);
  }
  for (const auto& bucket : by_fap) {
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        conflicts_.emplace_back(bucket[i], bucket[j]);
      }
    }
  }
  std::sort(conflicts_.begin(), conflicts_.end());
  conflicts_.erase(std::unique(conflicts_.begin(), conflicts_.end()), conflicts_.end());
  index_conflicts();
}

void WeightedGraph::index_conflicts() {
  adjacency_.assign(weights_.size(), {});
  for (const auto& [a, b] : conflicts_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::vector<VertexSet> ClusteringSolution::cluster_sets() const {
  std::vector<VertexSet> sets;
  sets.reserve(clusters.size());
  for (const auto& c : clusters) sets.push_back(c.members);
  return sets;
}

ClusteringSolution make_solution(const WeightedGraph& g, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  ClusteringSolution sol;
  sol.indicator.assign(g.size(), 0);
  for (std::size_t n : chosen) {
    if (n >= g.size()) throw InvalidInput("solution: vertex index out of range");
    sol.indicator[n] = 1;
  }
  for (std::size_t n : chosen) {
    for (std::size_t nb : g.neighbors(n)) {
      if (sol.indicator[nb]) {
        throw InvariantViolation("solution picks conflicting vertices " +
                                 std::to_string(n) + " and " + std::to_string(nb));
      }
    }
    sol.objective += g.weight(n);
  }
  sol.chosen = std::move(chosen);
  if (g.has_clusters()) {
    std::vector<char> used(g.fap_count(), 0);
    for (std::size_t n : sol.chosen) {
      sol.clusters.push_back(g.clusters()[n]);
      for (FapIndex m : g.clusters()[n].members) used[m] = 1;
    }
    std::vector<FapIndex> rest;
    for (FapIndex m = 0; m < g.fap_count(); ++m) {
      if (!used[m]) rest.push_back(m);
    }
    sol.nonclustered = VertexSet(std::move(rest));
  }
  return sol;
}

WeightedGraph build_weighted_graph(std::span<const VertexSet> candidates,
                                   const Scenario& scenario, const CacheBudget& budget) {
  const auto locals = scenario.locals();
  const auto loads = scenario.loads();
  const int files = scenario.catalog.file_count;
  const double bits = scenario.catalog.file_size_bits;
  budget.validate(files);

  std::vector<CandidateCluster> clusters;
  clusters.reserve(candidates.size());
  for (const auto& members : candidates) {
    double weight = incremental_traffic(members.members(), locals, loads, budget, bits);
    double scale = 0;
    for (FapIndex m : members) scale += loads.lambda(m);
    scale *= bits;
    if (weight < 0 && weight >= -kWeightRoundingTolerance * scale) weight = 0;
    clusters.push_back({members, budget.cluster_capacity(members.size(), files), weight});
  }
  return WeightedGraph(std::move(clusters), scenario.fap_count());
}

ClusteringSolution greedy_mwis(const WeightedGraph& g) {
  require_nonnegative(g);
  const std::size_t n = g.size();
  std::vector<std::size_t> by_weight(n);
  std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [&](std::size_t a, std::size_t b) { return g.weight(a) > g.weight(b); });

  double best_score = 0;
  std::vector<std::size_t> best;
  std::vector<char> removed(n);
  std::vector<std::size_t> picked;
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(removed.begin(), removed.end(), 0);
    picked.clear();
    auto take = [&](std::size_t v) {
      picked.push_back(v);
      removed[v] = 1;
      for (std::size_t nb : g.neighbors(v)) removed[nb] = 1;
      return g.weight(v);
    };
    double score = take(start);
    // Removal only shrinks the pool, so one pass in weight order finds each
    // successive heaviest survivor.
    for (std::size_t v : by_weight) {
      if (!removed[v]) score += take(v);
    }
    if (best_score < score) {
      best_score = score;
      best = picked;
    }
  }
  return make_solution(g, std::move(best));
}

ClusteringSolution exact_mwis(const WeightedGraph& g, std::size_t guard) {
  const std::size_t n = g.size();
  if (n > guard) {
    throw InvalidInput("exact max-weight independent set limited to " +
                       std::to_string(guard) + " vertices, got " + std::to_string(n));
  }
  require_nonnegative(g);

  std::vector<int> blocked(n, 0);
  std::vector<char> x(n, 0);
  std::vector<char> best_x(n, 0);
  // The greedy score (less a rounding margin) seeds the incumbent so the bound
  // prunes from the start.
  const double greedy = greedy_mwis(g).objective;
  double best = greedy - 1e-9 * greedy;
  bool found = false;

  // x_i = 0 is explored before x_i = 1 and only strict improvements replace
  // the incumbent, so the optimum kept is the lexicographically smallest.
  auto search = [&](auto&& self, std::size_t i, double value) -> void {
    if (i == n) {
      if (found ? value > best : value >= best) {
        best = value;
        best_x = x;
        found = true;
      }
      return;
    }
    double bound = value;
    for (std::size_t k = i; k < n; ++k) {
      if (!blocked[k]) bound += g.weight(k);
    }
    if (bound < best || (found && bound <= best)) return;

    self(self, i + 1, value);
    if (!blocked[i]) {
      x[i] = 1;
      for (std::size_t nb : g.neighbors(i)) ++blocked[nb];
      self(self, i + 1, value + g.weight(i));
      for (std::size_t nb : g.neighbors(i)) --blocked[nb];
      x[i] = 0;
    }
  };
  search(search, 0, 0.0);
  if (!found) throw InvariantViolation("exact search lost the greedy incumbent");

  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < n; ++k) {
    if (best_x[k]) chosen.push_back(k);
  }
  return make_solution(g, std::move(chosen));
}

ClusteringSolution exact_cluster_packing(const WeightedGraph& g) {
  if (!g.has_clusters()) {
    throw InvalidInput("cluster packing needs a graph built from candidate clusters");
  }
  const std::size_t faps = g.fap_count();
  if (faps > kPackingFapGuard) {
    throw InvalidInput("cluster packing limited to " + std::to_string(kPackingFapGuard) +
                       " F-APs, got " + std::to_string(faps));
  }
  require_nonnegative(g);

  // Candidates grouped by their lowest member.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> by_low(faps);
  for (std::size_t n = 0; n < g.size(); ++n) {
    std::uint32_t mask = 0;
    for (FapIndex m : g.clusters()[n].members) mask |= 1u << m;
    by_low[g.clusters()[n].members.front()].emplace_back(mask, n);
  }

  const std::uint32_t states = 1u << faps;
  std::vector<double> value(states, 0.0);
  constexpr std::size_t kSkip = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> choice(states, kSkip);
  for (std::uint32_t mask = 1; mask < states; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    value[mask] = value[mask & (mask - 1)];
    for (const auto& [cmask, n] : by_low[low]) {
      if ((cmask & mask) != cmask) continue;
      const double candidate = g.weight(n) + value[mask & ~cmask];
      if (candidate > value[mask]) {
        value[mask] = candidate;
        choice[mask] = n;
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::uint32_t mask = states - 1;
  while (mask) {
    const std::size_t n = choice[mask];
    if (n == kSkip) {
      mask &= mask - 1;
      continue;
    }
    chosen.push_back(n);
    for (FapIndex m : g.clusters()[n].members) mask &= ~(1u << m);
  }
  return make_solution(g, std::move(chosen));
}

TrafficReport whole_traffic(const ClusteringSolution& solution, const Scenario& scenario,
                            const CacheBudget& budget) {
  const auto sets = solution.cluster_sets();
  return whole_traffic(std::span<const VertexSet>(sets), scenario, budget);
}

SolveResult solve(const Scenario& scenario, const CacheBudget& budget,
                  const SolveOptions& options) {
  scenario.validate();
  budget.validate(scenario.catalog.file_count);

  SolveResult result;
  result.graph = build_node_graph(scenario.faps, options.thresholds.gamma_d,
                                  options.thresholds.gamma_l);
  const auto tables = forward_tables(result.graph);
  double table_total = 0;
  for (const auto& t : tables) {
    table_total += static_cast<double>(t.entries.size());
    if (!t.redundant) ++result.surviving_tables;
  }
  result.mean_table_size = tables.empty() ? 0 : table_total / static_cast<double>(tables.size());

  result.cliques = enumerate_cliques(result.graph, options.max_cluster_size);
  auto candidates = result.cliques.all_cliques;
  auto weighted = build_weighted_graph(candidates, scenario, budget);
  if (budget.policy == KnPolicy::Fixed) {
    // A cluster that loses traffic is never better than leaving its members
    // alone, so it is dropped rather than offered to the solver.
    std::vector<CandidateCluster> kept;
    for (const auto& c : weighted.clusters()) {
      if (c.weight >= 0) kept.push_back(c);
    }
    weighted = WeightedGraph(std::move(kept), scenario.fap_count());
  }
  result.weighted = std::move(weighted);

  if (options.solver == Solver::Greedy) {
    result.solution = greedy_mwis(result.weighted);
  } else if (result.weighted.size() <= kExactMwisGuard) {
    result.solution = exact_mwis(result.weighted);
  } else {
    result.solution = exact_cluster_packing(result.weighted);
  }

  result.report = whole_traffic(result.solution, scenario, budget);
  const double a = result.solution.objective;
  const double b = result.report.incremental;
  // Rounding in T^i comes from differences of whole-traffic-sized terms.
  const double scale = std::max({std::abs(a), std::abs(b), result.report.whole});
  if (std::abs(a - b) > kDecompositionTolerance * scale) {
    throw InvariantViolation("solver objective " + std::to_string(a) +
                             " disagrees with incremental traffic " + std::to_string(b));
  }
  return result;
}

}  // namespace fogcache
