#pragma once

#include <cstdint>
#include <vector>

#include "fogcache/popularity.hpp"

namespace fogcache {

struct Position {
  double x = 0;  // meters
  double y = 0;

  bool operator==(const Position&) const = default;
};

/// One fog access point.
struct FapNode {
  int id = 0;  // 1..M
  Position position;
  double lambda = 0;  // requests per second
  PopularityVector local_pop;

  bool operator==(const FapNode&) const = default;
};

struct Region {
  double width = 1000;  // meters
  double height = 1000;

  bool operator==(const Region&) const = default;
};

struct LoadRange {
  double min = 50;  // requests per second
  double max = 150;

  bool operator==(const LoadRange&) const = default;
};

/// A complete experiment input: the catalog plus every F-AP.
struct Scenario {
  Catalog catalog;
  Region region;
  std::vector<FapNode> faps;
  std::uint64_t seed = 0;
  double zipf_z = 0.6;
  int heterogeneity = 0;  // transpositions per local popularity vector
  LoadRange lambda_range;

  std::size_t fap_count() const { return faps.size(); }

  /// Local popularity vectors in F-AP order.
  std::vector<PopularityVector> locals() const;
  LoadWeights loads() const;

  /// Throws InvalidInput naming the offending F-AP when an invariant fails.
  void validate() const;

  bool operator==(const Scenario& other) const;
};

}  // namespace fogcache
