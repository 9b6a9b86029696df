#include "realq/report.hpp"

#include <sstream>

#include "json.hpp"

namespace realq {

bool ExperimentReport::passed() const {
  for (const auto& [key, ok] : verdicts) {
    if (!ok) return false;
  }
  return true;
}

void ExperimentReport::merge(const std::string& prefix, const ExperimentReport& other) {
  for (const auto& [key, value] : other.metrics) metrics[prefix + "/" + key] = value;
  for (const auto& [key, value] : other.verdicts) verdicts[prefix + "/" + key] = value;
}

std::string to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["seed"] = report.seed;
  j["params"] = report.params;
  j["metrics"] = report.metrics;
  j["verdicts"] = report.verdicts;
  j["passed"] = report.passed();
  j["provenance"] = report.provenance;
  return j.dump(2) + "\n";
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "section,key,value\n";
  for (const auto& [key, value] : report.params) out << "param," << key << ',' << value << '\n';
  for (const auto& [key, value] : report.metrics) out << "metric," << key << ',' << value << '\n';
  for (const auto& [key, value] : report.verdicts) out << "verdict," << key << ',' << (value ? "true" : "false") << '\n';
  return out.str();
}

ExperimentReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ExperimentReport r;
  r.name = j.at("name").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.metrics = j.at("metrics").get<std::map<std::string, double>>();
  r.verdicts = j.at("verdicts").get<std::map<std::string, bool>>();
  r.provenance = j.at("provenance").get<std::string>();
  return r;
}

}  // namespace realq
