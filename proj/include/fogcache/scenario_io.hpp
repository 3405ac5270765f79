#pragma once

#include <filesystem>
#include <string>

#include "fogcache/scenario.hpp"

namespace fogcache {

inline constexpr int kScenarioFormatVersion = 1;

/// JSON text for a scenario. Doubles are written in shortest round-trip form,
/// so parse_scenario(format_scenario(s)) == s bit for bit.
std::string format_scenario(const Scenario& scenario);

/// Parses and validates; InvalidInput messages carry the JSON field path.
Scenario parse_scenario(const std::string& text);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace fogcache
