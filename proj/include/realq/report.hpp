#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace realq {

inline constexpr const char* kVersion = "realq 0.1.0";

/// Result of one named scenario or check run. Maps are ordered, so the JSON
/// rendering is byte-stable for a given (name, seed, params).
struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
  std::map<std::string, double> metrics;
  std::map<std::string, bool> verdicts;
  std::string provenance = kVersion;

  bool passed() const;

  /// Copies metrics and verdicts of another report under "prefix/".
  void merge(const std::string& prefix, const ExperimentReport& other);
};

std::string to_json(const ExperimentReport& report);
std::string to_csv(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

}  // namespace realq
