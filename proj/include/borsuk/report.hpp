#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace borsuk {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Self-describing record of one run. Everything except wall_times is a
/// deterministic function of the command, parameters, seed and version.
struct RunReport {
  std::string command_line;
  int schema_version = kReportSchemaVersion;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json results = nlohmann::json::object();
  std::map<std::string, bool> optimal;
  std::map<std::string, double> wall_times;
  std::string artifact_version = kArtifactVersion;

  bool all_optimal() const;
  nlohmann::json to_json() const;
  /// Throws ParseError on a missing field or a schema version mismatch.
  static RunReport from_json(const nlohmann::json& j);
  /// to_json() without wall_times.
  nlohmann::json payload() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

}  // namespace borsuk
