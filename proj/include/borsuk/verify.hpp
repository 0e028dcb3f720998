#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace borsuk {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Suite defaults apply when unset.
  std::optional<int> trials;
  std::optional<int> n_max;
  std::optional<std::uint64_t> node_limit;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  std::uint64_t violations = 0;
  /// Some solve hit its node limit; affected checks are reported, not passed.
  bool complete = true;
  nlohmann::json details = nlohmann::json::object();
  /// One entry per violation, enough to rebuild the instance.
  std::vector<nlohmann::json> witnesses;

  bool passed() const { return violations == 0 && complete; }
};

/// hopf-pannwitz, heppes-revesz, schur-faces, tensor-law, coboundary, dckw,
/// solver-oracle, rigidity, larman-t1.
std::vector<std::string> suite_names();

/// Throws PreconditionError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace borsuk
