#pragma once

// Property suites driven by the `check` command.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realq/report.hpp"
#include "realq/types.hpp"

namespace realq::suites {

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<int> dims = {2, 3, 4};
  int trials = 100;
  /// Oracle-agreement tolerance. Structural identities keep their own,
  /// tighter thresholds.
  double tolerance = kAgreementTol;
  std::optional<std::string> suite;
  std::optional<std::string> output_path;
};

/// Throws InvalidArgument for an empty dims list, a non-positive dimension,
/// trials < 1, tolerance <= 0 or an unknown suite name.
void validate(const RunConfig& config);

const std::vector<std::string>& suite_names();

ExperimentReport run_suite(const std::string& name, const RunConfig& config);

/// Runs the selected suite (or every suite) into one aggregate report whose
/// metric and verdict keys are prefixed with the suite name.
ExperimentReport run_check(const RunConfig& config);

}  // namespace realq::suites
