#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "frameforge/report.hpp"

namespace frameforge::cli {

/// Configuration/schema violation: rejected before any computation runs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  std::string kind;  // one of the closed enumeration in kScenarioKinds
  nlohmann::json parameters;
  std::string output_path;
};

inline const std::vector<std::string> kScenarioKinds = {
    "blaschke-certify", "beurling-roundtrip", "orbit-frame",
    "boundedness-probe", "riesz-exhaustive",  "model-space"};

/// Validates the scenario against its kind's schema (ConfigError on
/// violation), executes the mapped module pipeline, and returns the
/// records. Numerical failures inside the pipeline become failed records;
/// the run continues.
std::vector<ReportRecord> run_scenario(const Scenario& s);

struct BatchOutcome {
  int scenarios = 0;
  int records = 0;
  int failed_records = 0;
};

/// Runs a {"spec_version": "1", "scenarios": [...]} document: every scenario
/// is schema-validated up front, executed in config order, and its records
/// are flushed to its output path.
BatchOutcome run_batch(const nlohmann::json& config);

BatchOutcome run_batch_file(const std::string& config_path);

/// 0 all records passed, 1 otherwise (config/IO errors map to 2 in the CLI).
int exit_code(const BatchOutcome& outcome);

}  // namespace frameforge::cli
