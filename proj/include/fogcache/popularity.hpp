#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fogcache {

/// Tolerance for every "sums to one" check on probability vectors.
inline constexpr double kProbabilityTolerance = 1e-9;

/// The content library: F equally sized files.
struct Catalog {
  int file_count = 0;         // F
  double file_size_bits = 0;  // L

  Catalog() = default;
  Catalog(int files, double size_bits);
};

/// Request probabilities over the catalog. Index f-1 holds file f.
///
/// Construction validates that every entry lies in [0,1] and that the vector
/// sums to one within kProbabilityTolerance.
class PopularityVector {
 public:
  PopularityVector() = default;
  explicit PopularityVector(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t index) const { return probs_[index]; }
  std::span<const double> probs() const { return probs_; }

  /// File indices (0-based) by descending probability, ties by ascending index.
  std::vector<std::size_t> ranking() const;

  /// Mass of the k most popular files under ranking() order.
  double top_mass(std::size_t k) const;

  /// Mass of an arbitrary set of 0-based file indices.
  double mass_of(std::span<const std::size_t> files) const;

  bool operator==(const PopularityVector&) const = default;

 private:
  std::vector<double> probs_;
};

/// Arrival rates lambda_m and their normalized traffic shares w_m.
class LoadWeights {
 public:
  LoadWeights() = default;
  explicit LoadWeights(std::vector<double> lambdas);

  std::size_t size() const { return lambdas_.size(); }
  double lambda(std::size_t m) const { return lambdas_[m]; }
  double weight(std::size_t m) const { return weights_[m]; }
  std::span<const double> lambdas() const { return lambdas_; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> lambdas_;
  std::vector<double> weights_;
};

/// Zipf(z) over F files ranked by id: p_f proportional to f^-z.
PopularityVector zipf_popularity(int file_count, double z);

/// Permutation of 0..F-1 built from `swaps` random transpositions of the
/// identity; entry r is the file that takes popularity rank r.
std::vector<std::size_t> transposition_permutation(int file_count, int swaps,
                                                   std::uint64_t seed);

/// Zipf(z) masses laid over a per-F-AP permutation of the catalog obtained by
/// applying `swaps` random transpositions to the identity. swaps == 0 gives
/// the global Zipf order.
PopularityVector local_popularity(const Catalog& catalog, double z, int swaps,
                                  std::uint64_t seed);

/// Load-weighted mixture of the members' local popularity, renormalized over
/// the members' weights. `locals` and `loads` are indexed by F-AP.
PopularityVector cluster_popularity(std::span<const std::size_t> members,
                                    std::span<const PopularityVector> locals,
                                    const LoadWeights& loads);

/// p_f = sum_m p_mf w_m over every F-AP.
PopularityVector global_popularity(std::span<const PopularityVector> locals,
                                   const LoadWeights& loads);

}  // namespace fogcache
