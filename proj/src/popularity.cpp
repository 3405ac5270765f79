#include "fogcache/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fogcache/errors.hpp"
#include "fogcache/random.hpp"

namespace fogcache {

Catalog::Catalog(int files, double size_bits)
    : file_count(files), file_size_bits(size_bits) {
  if (files < 1) throw InvalidInput("catalog needs at least one file");
  if (!(size_bits > 0)) throw InvalidInput("file size must be positive");
}

PopularityVector::PopularityVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInput("popularity vector is empty");
  double total = 0;
  for (std::size_t f = 0; f < probs_.size(); ++f) {
    const double p = probs_[f];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidInput("popularity entry " + std::to_string(f + 1) +
                         " outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw InvalidInput("popularity sums to " + std::to_string(total) +
                       ", expected 1");
  }
}

std::vector<std::size_t> PopularityVector::ranking() const {
  std::vector<std::size_t> order(probs_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [this](std::size_t a, std::size_t b) {
                     return probs_[a] > probs_[b];
                   });
  return order;
}

double PopularityVector::top_mass(std::size_t k) const {
  if (k > probs_.size()) throw InvalidInput("top_mass: k exceeds catalog size");
  const auto order = ranking();
  double mass = 0;
  for (std::size_t r = 0; r < k; ++r) mass += probs_[order[r]];
  return mass;
}

double PopularityVector::mass_of(std::span<const std::size_t> files) const {
  double mass = 0;
  for (std::size_t f : files) {
    if (f >= probs_.size()) throw InvalidInput("mass_of: file index out of range");
    mass += probs_[f];
  }
  return mass;
}

LoadWeights::LoadWeights(std::vector<double> lambdas)
    : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw InvalidInput("load weights need at least one F-AP");
  double total = 0;
  for (double l : lambdas_) {
    if (!(l > 0) || !std::isfinite(l)) {
      throw InvalidInput("arrival rates must be positive and finite");
    }
    total += l;
  }
  weights_.reserve(lambdas_.size());
  for (double l : lambdas_) weights_.push_back(l / total);
}

PopularityVector zipf_popularity(int file_count, double z) {
  if (file_count < 1) throw InvalidInput("zipf: file count must be >= 1");
  if (!(z >= 0) || !std::isfinite(z)) {
    throw InvalidInput("zipf: exponent must be a nonnegative real");
  }
  std::vector<double> probs(static_cast<std::size_t>(file_count));
  double norm = 0;
  for (int f = 1; f <= file_count; ++f) {
    probs[f - 1] = std::pow(static_cast<double>(f), -z);
    norm += probs[f - 1];
  }
  for (double& p : probs) p /= norm;
  return PopularityVector(std::move(probs));
}

std::vector<std::size_t> transposition_permutation(int file_count, int swaps,
                                                   std::uint64_t seed) {
  if (file_count < 1) throw InvalidInput("permutation: file count must be >= 1");
  if (swaps < 0) throw InvalidInput("heterogeneity swaps must be >= 0");
  std::vector<std::size_t> perm(static_cast<std::size_t>(file_count));
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (file_count < 2) return perm;
  Rng rng(seed);
  const std::size_t n = perm.size();
  for (int s = 0; s < swaps; ++s) {
    const std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

PopularityVector local_popularity(const Catalog& catalog, double z, int swaps,
                                  std::uint64_t seed) {
  const auto base = zipf_popularity(catalog.file_count, z);
  if (swaps == 0) return base;
  const auto perm = transposition_permutation(catalog.file_count, swaps, seed);
  std::vector<double> probs(base.size());
  for (std::size_t rank = 0; rank < perm.size(); ++rank) {
    probs[perm[rank]] = base[rank];
  }
  return PopularityVector(std::move(probs));
}

PopularityVector cluster_popularity(std::span<const std::size_t> members,
                                    std::span<const PopularityVector> locals,
                                    const LoadWeights& loads) {
  if (members.empty()) throw InvalidInput("cluster popularity: empty member set");
  if (locals.size() != loads.size()) {
    throw InvalidInput("cluster popularity: locals and loads differ in length");
  }
  for (std::size_t m : members) {
    if (m >= locals.size()) {
      throw InvalidInput("cluster popularity: member index out of range");
    }
  }
  const std::size_t files = locals[members.front()].size();
  for (std::size_t m : members) {
    if (locals[m].size() != files) {
      throw InvalidInput("cluster popularity: catalog sizes differ");
    }
  }
  if (members.size() == 1) return locals[members.front()];

  double weight_sum = 0;
  for (std::size_t m : members) weight_sum += loads.weight(m);
  std::vector<double> probs(files, 0.0);
  for (std::size_t m : members) {
    const double share = loads.weight(m) / weight_sum;
    for (std::size_t f = 0; f < files; ++f) probs[f] += locals[m][f] * share;
  }
  // Rounding can push a mixture a hair above 1 when one file dominates.
  for (double& p : probs) p = std::min(p, 1.0);
  return PopularityVector(std::move(probs));
}

PopularityVector global_popularity(std::span<const PopularityVector> locals,
                                   const LoadWeights& loads) {
  if (locals.empty() || locals.size() != loads.size()) {
    throw InvalidInput("global popularity: need one local vector per F-AP");
  }
  const std::size_t files = locals.front().size();
  std::vector<double> probs(files, 0.0);
  for (std::size_t m = 0; m < locals.size(); ++m) {
    if (locals[m].size() != files) {
      throw InvalidInput("global popularity: catalog sizes differ");
    }
    for (std::size_t f = 0; f < files; ++f) {
      probs[f] += locals[m][f] * loads.weight(m);
    }
  }
  for (double& p : probs) p = std::min(p, 1.0);
  return PopularityVector(std::move(probs));
}

}  // namespace fogcache
