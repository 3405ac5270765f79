#include "fogcache/scenario.hpp"

#include <string>

#include "fogcache/errors.hpp"

namespace fogcache {

std::vector<PopularityVector> Scenario::locals() const {
  std::vector<PopularityVector> out;
  out.reserve(faps.size());
  for (const auto& fap : faps) out.push_back(fap.local_pop);
  return out;
}

LoadWeights Scenario::loads() const {
  std::vector<double> lambdas;
  lambdas.reserve(faps.size());
  for (const auto& fap : faps) lambdas.push_back(fap.lambda);
  return LoadWeights(std::move(lambdas));
}

void Scenario::validate() const {
  if (catalog.file_count < 1 || !(catalog.file_size_bits > 0)) {
    throw InvalidInput("scenario: invalid catalog");
  }
  if (faps.empty()) throw InvalidInput("scenario: no F-APs");
  if (!(region.width > 0) || !(region.height > 0)) {
    throw InvalidInput("scenario: region must have positive extent");
  }
  if (!(lambda_range.min > 0) || lambda_range.max < lambda_range.min) {
    throw InvalidInput("scenario: invalid lambda range");
  }
  for (std::size_t i = 0; i < faps.size(); ++i) {
    const auto& fap = faps[i];
    const std::string who = "F-AP " + std::to_string(fap.id);
    if (fap.id != static_cast<int>(i) + 1) {
      throw InvalidInput("scenario: F-AP ids must be contiguous from 1 (found " +
                         std::to_string(fap.id) + " at position " +
                         std::to_string(i + 1) + ")");
    }
    const auto& p = fap.position;
    if (!(p.x >= 0 && p.x <= region.width && p.y >= 0 && p.y <= region.height)) {
      throw InvalidInput("scenario: " + who + " lies outside the region");
    }
    if (!(fap.lambda >= lambda_range.min && fap.lambda <= lambda_range.max)) {
      throw InvalidInput("scenario: " + who + " arrival rate outside lambda range");
    }
    if (fap.local_pop.size() != static_cast<std::size_t>(catalog.file_count)) {
      throw InvalidInput("scenario: " + who +
                         " popularity length differs from the catalog");
    }
  }
}

bool Scenario::operator==(const Scenario& other) const {
  return catalog.file_count == other.catalog.file_count &&
         catalog.file_size_bits == other.catalog.file_size_bits &&
         region == other.region && faps == other.faps && seed == other.seed &&
         zipf_z == other.zipf_z && heterogeneity == other.heterogeneity &&
         lambda_range == other.lambda_range;
}

}  // namespace fogcache
