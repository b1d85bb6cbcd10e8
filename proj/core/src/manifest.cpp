#include "bgc/manifest.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "bgc/version.hpp"

namespace bgc {

void RunManifest::add(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void RunManifest::add(const std::string& key, long long value) {
  parameters.emplace_back(key, std::to_string(value));
}

void RunManifest::add(const std::string& key, unsigned long long value) {
  parameters.emplace_back(key, std::to_string(value));
}

void RunManifest::add(const std::string& key, double value) {
  // Shortest exact round-trip form (0.99 stays "0.99").
  parameters.emplace_back(key, nlohmann::json(value).dump());
}

void RunManifest::add(const std::string& key, bool value) {
  parameters.emplace_back(key, value ? "true" : "false");
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["version"] = kVersion;
  for (const auto& [key, value] : parameters) doc[key] = value;
  return doc.dump();
}

}  // namespace bgc
