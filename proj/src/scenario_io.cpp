#include "fogcache/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "fogcache/errors.hpp"
#include "json.hpp"

namespace fogcache {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InvalidInput(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(path + "." + key + ": missing field");
  return *it;
}

double number(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_number()) throw InvalidInput(path + "." + key + ": expected a number");
  return v.get<double>();
}

long long integer(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_number_integer()) throw InvalidInput(path + "." + key + ": expected an integer");
  return v.get<long long>();
}

}  // namespace

std::string format_scenario(const Scenario& s) {
  json doc;
  doc["version"] = kScenarioFormatVersion;
  doc["seed"] = s.seed;
  doc["zipf_z"] = s.zipf_z;
  doc["heterogeneity"] = s.heterogeneity;
  doc["catalog"] = {{"file_count", s.catalog.file_count},
                    {"file_size_bits", s.catalog.file_size_bits}};
  doc["region"] = {{"width", s.region.width}, {"height", s.region.height}};
  doc["lambda_range"] = {{"min", s.lambda_range.min}, {"max", s.lambda_range.max}};
  json faps = json::array();
  for (const auto& fap : s.faps) {
    faps.push_back({{"id", fap.id},
                    {"x", fap.position.x},
                    {"y", fap.position.y},
                    {"lambda", fap.lambda},
                    {"popularity", std::vector<double>(fap.local_pop.probs().begin(),
                                                       fap.local_pop.probs().end())}});
  }
  doc["faps"] = std::move(faps);
  return doc.dump(2) + "\n";
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("scenario: malformed JSON: ") + e.what());
  }
  const std::string root = "scenario";
  const auto version = integer(doc, "version", root);
  if (version != kScenarioFormatVersion) {
    throw InvalidInput(root + ".version: unsupported version " + std::to_string(version));
  }

  Scenario s;
  const auto& seed = field(doc, "seed", root);
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw InvalidInput(root + ".seed: expected a nonnegative integer");
  }
  s.seed = seed.get<std::uint64_t>();
  s.zipf_z = number(doc, "zipf_z", root);
  s.heterogeneity = static_cast<int>(integer(doc, "heterogeneity", root));

  const auto& catalog = field(doc, "catalog", root);
  const auto file_count = integer(catalog, "file_count", root + ".catalog");
  const auto file_size = number(catalog, "file_size_bits", root + ".catalog");
  try {
    s.catalog = Catalog(static_cast<int>(file_count), file_size);
  } catch (const InvalidInput& e) {
    throw InvalidInput(root + ".catalog: " + e.what());
  }

  const auto& region = field(doc, "region", root);
  s.region.width = number(region, "width", root + ".region");
  s.region.height = number(region, "height", root + ".region");
  const auto& range = field(doc, "lambda_range", root);
  s.lambda_range.min = number(range, "min", root + ".lambda_range");
  s.lambda_range.max = number(range, "max", root + ".lambda_range");

  const auto& faps = field(doc, "faps", root);
  if (!faps.is_array()) throw InvalidInput(root + ".faps: expected an array");
  for (std::size_t i = 0; i < faps.size(); ++i) {
    const std::string path = root + ".faps[" + std::to_string(i) + "]";
    const auto& item = faps[i];
    FapNode fap;
    fap.id = static_cast<int>(integer(item, "id", path));
    fap.position = {number(item, "x", path), number(item, "y", path)};
    fap.lambda = number(item, "lambda", path);
    const auto& pop = field(item, "popularity", path);
    if (!pop.is_array()) throw InvalidInput(path + ".popularity: expected an array");
    std::vector<double> probs;
    for (const auto& p : pop) {
      if (!p.is_number()) throw InvalidInput(path + ".popularity: non-numeric entry");
      probs.push_back(p.get<double>());
    }
    try {
      fap.local_pop = PopularityVector(std::move(probs));
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ".popularity (F-AP " + std::to_string(fap.id) + "): " + e.what());
    }
    s.faps.push_back(std::move(fap));
  }
  s.validate();
  return s;
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write scenario file " + path.string());
  out << format_scenario(scenario);
  if (!out) throw InvalidInput("failed writing scenario file " + path.string());
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open scenario file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace fogcache
