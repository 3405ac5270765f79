#include "fogcache/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "fogcache/errors.hpp"

namespace fogcache {

namespace {

VertexSet to_vertex_set(const VertexBits& bits) {
  std::vector<FapIndex> members;
  members.reserve(bits.count());
  for (auto v = bits.find_first(); v != VertexBits::npos; v = bits.find_next(v)) {
    members.push_back(v);
  }
  return VertexSet(std::move(members));
}

VertexBits to_bits(const VertexSet& set, std::size_t n) {
  VertexBits bits(n);
  for (FapIndex v : set) bits.set(v);
  return bits;
}

// Smallest j in `table` with a non-neighbor in `table`, or npos.
std::size_t first_conflict_vertex(const NodeGraph& g, const VertexBits& table) {
  for (auto j = table.find_first(); j != VertexBits::npos; j = table.find_next(j)) {
    VertexBits outside = table - g.neighbors(j);
    outside.reset(j);
    if (outside.any()) return j;
  }
  return VertexBits::npos;
}

std::vector<VertexSet> keep_maximal(std::set<VertexSet> found) {
  std::vector<VertexSet> sets(found.begin(), found.end());
  // Larger sets first so containment only has to look backwards.
  std::stable_sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() > b.size();
  });
  std::vector<VertexSet> kept;
  for (const auto& s : sets) {
    const bool contained = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) {
      return k.size() > s.size() && s.is_subset_of(k);
    });
    if (!contained) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void collect_subsets(const VertexSet& clique, std::size_t max_size,
                     std::set<VertexSet>& out) {
  const auto members = clique.members();
  std::vector<FapIndex> current;
  // Depth-first over combinations in lexicographic order.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (current.size() >= 2) {
      out.insert(VertexSet(current));
      if (out.size() > kCandidateLimit) {
        throw InvalidInput("candidate cluster set exceeds " +
                           std::to_string(kCandidateLimit) +
                           "; set a maximum cluster size");
      }
    }
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < members.size(); ++i) {
      current.push_back(members[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
}

}  // namespace

bool is_complete(const NodeGraph& g, const VertexSet& members) {
  const auto m = members.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (!g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

std::vector<VertexSet> maximal_cliques(const NodeGraph& g) {
  const std::size_t n = g.vertex_count();
  std::set<VertexSet> found;
  std::vector<VertexBits> found_bits;

  for (const auto& table : adjacency_tables(g)) {
    std::vector<VertexBits> worklist{to_bits(table.entries, n)};
    std::set<VertexBits> seen;
    while (!worklist.empty()) {
      VertexBits work = std::move(worklist.back());
      worklist.pop_back();
      if (!seen.insert(work).second) continue;
      // Anything inside an already complete table can only yield its subsets.
      const bool covered = std::any_of(found_bits.begin(), found_bits.end(),
                                       [&](const VertexBits& c) { return work.is_subset_of(c); });
      if (covered) continue;

      const auto j = first_conflict_vertex(g, work);
      if (j == VertexBits::npos) {
        if (work.count() >= 2 && found.insert(to_vertex_set(work)).second) {
          found_bits.push_back(work);
        }
        continue;
      }
      // Fork: cliques in `work` either avoid j or lie inside j's closed
      // neighborhood.
      VertexBits without_j = work;
      without_j.reset(j);
      VertexBits closed = g.neighbors(j);
      closed.set(j);
      worklist.push_back(std::move(without_j));
      worklist.push_back(work & closed);
    }
  }
  return keep_maximal(std::move(found));
}

std::vector<VertexSet> brute_force_maximal_cliques(const NodeGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kCliqueOracleVertexGuard) {
    throw InvalidInput("brute-force clique oracle limited to " +
                       std::to_string(kCliqueOracleVertexGuard) + " vertices, got " +
                       std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  auto complete = [&](std::uint32_t mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1u) && (mask & ~(1u << v) & ~adj[v])) return false;
    }
    return true;
  };
  std::vector<VertexSet> out;
  const std::uint32_t total = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (std::popcount(mask) < 2 || !complete(mask)) continue;
    bool extendable = false;
    for (std::size_t v = 0; v < n && !extendable; ++v) {
      if (!(mask >> v & 1u) && (adj[v] & mask) == mask) extendable = true;
    }
    if (extendable) continue;
    std::vector<FapIndex> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) members.push_back(v);
    }
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> all_complete_subgraphs(std::span<const VertexSet> maximal,
                                              std::optional<std::size_t> max_cluster_size) {
  const std::size_t cap = max_cluster_size.value_or(SIZE_MAX);
  if (cap < 2) return {};
  std::set<VertexSet> out;
  for (const auto& clique : maximal) collect_subsets(clique, cap, out);
  return {out.begin(), out.end()};
}

CliqueCatalog enumerate_cliques(const NodeGraph& g,
                                std::optional<std::size_t> max_cluster_size) {
  CliqueCatalog catalog;
  catalog.maximal = maximal_cliques(g);
  catalog.all_cliques = all_complete_subgraphs(catalog.maximal, max_cluster_size);
  return catalog;
}

}  // namespace fogcache
