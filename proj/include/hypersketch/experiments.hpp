#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypersketch {

struct ExperimentReport {
  std::string experiment;
  nlohmann::json parameters;  // resolved (defaults filled in)
  std::uint64_t seed = 0;
  std::map<std::string, double> metrics;
  bool pass = false;
  double wall_time_ms = 0.0;  // informational; kept out of the stdout JSON

  // Deterministic payload: everything except wall_time_ms.
  nlohmann::json to_json() const;
};

const std::vector<std::string>& experiment_names();

// Runs one named experiment with parameter overrides (missing keys take the
// experiment's defaults). Unknown names raise UsageError.
ExperimentReport run_experiment(const std::string& name, const nlohmann::json& params,
                                std::uint64_t seed);

}  // namespace hypersketch
