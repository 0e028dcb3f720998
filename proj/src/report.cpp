#include "borsuk/report.hpp"

#include "borsuk/errors.hpp"

namespace borsuk {

bool RunReport::all_optimal() const {
  for (const auto& [name, ok] : optimal)
    if (!ok) return false;
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j = payload();
  j["wall_times"] = wall_times;
  return j;
}

nlohmann::json RunReport::payload() const {
  return {{"command_line", command_line},
          {"schema_version", schema_version},
          {"artifact_version", artifact_version},
          {"seed", seed},
          {"parameters", parameters},
          {"results", results},
          {"optimal", optimal}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw ParseError("report", 0, 0,
                       "unsupported schema version " + std::to_string(r.schema_version));
    r.command_line = j.at("command_line").get<std::string>();
    r.artifact_version = j.at("artifact_version").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    r.optimal = j.at("optimal").get<std::map<std::string, bool>>();
    r.wall_times = j.value("wall_times", std::map<std::string, double>{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report", 0, 0, e.what());
  }
}

}  // namespace borsuk
