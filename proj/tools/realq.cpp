// realq: command-line front end.
//
// Exit codes: 0 all verdicts pass, 1 a verified property failed,
// 2 usage or I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "realq/composite.hpp"
#include "realq/io.hpp"
#include "realq/realify.hpp"
#include "realq/report.hpp"
#include "realq/scenarios.hpp"
#include "realq/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& content, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << content;
    return kExitPass;
  }
  realq::io::write_file_atomic(*path, content);
  return kExitPass;
}

int emit_report(const realq::ExperimentReport& report, const std::optional<std::string>& out,
                const std::optional<std::string>& csv) {
  emit(realq::to_json(report), out);
  if (csv) realq::io::write_file_atomic(*csv, realq::to_csv(report));
  if (!report.passed()) {
    for (const auto& [key, ok] : report.verdicts) {
      if (!ok) std::cerr << "FAILED: " << key << '\n';
    }
  }
  return report.passed() ? kExitPass : kExitFail;
}

int run_map(const std::string& direction, const std::string& input, const std::optional<std::string>& out,
            const std::string& kind_name) {
  using namespace realq;
  const auto kind = io::parse_kind(kind_name);
  const std::string text = io::read_file(input);
  if (direction == "realify") {
    const ComplexMatrix m = io::parse_complex_matrix(text);
    io::RealifiedFile file;
    file.kind = kind;
    switch (kind) {
      case io::RealifiedKind::operator_: file.data = realify_operator(m).matrix(); break;
      case io::RealifiedKind::state: file.data = realify_state(m).matrix(); break;
      case io::RealifiedKind::ket: file.data = realify_ket(m).data(); break;
    }
    return emit(io::format_realified(file), out);
  }
  const auto file = io::parse_realified(text);
  if (file.kind != kind) {
    throw io::FormatError("file kind '" + io::kind_name(file.kind) + "' does not match --kind " + kind_name);
  }
  ComplexMatrix m;
  switch (kind) {
    case io::RealifiedKind::operator_:
      m = complexify(RealifiedOperator<double>::from_matrix(file.data));
      break;
    case io::RealifiedKind::state:
      m = complexify(RealifiedState<double>::from_matrix(file.data));
      break;
    case io::RealifiedKind::ket:
      m = complexify(RealifiedKet<double>(file.data.col(0)));
      break;
  }
  return emit(io::format_complex_matrix(m), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-number embedding of quantum theory: property checks, conversions and demos"};
  app.set_version_flag("--version", std::string(realq::kVersion));
  app.require_subcommand(1);

  realq::suites::RunConfig config;
  std::optional<std::string> out;
  std::optional<std::string> csv;
  std::string suite;

  auto* check = app.add_subcommand("check", "run the property suites and write one aggregate report");
  check->add_option("--seed", config.seed, "random seed");
  check->add_option("--dims", config.dims, "comma-separated dimensions")->delimiter(',')->check(CLI::Range(1, 32));
  check->add_option("--trials", config.trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--tol", config.tolerance, "oracle-agreement tolerance")->check(CLI::PositiveNumber);
  check->add_option("--suite", suite, "run a single suite")->check(CLI::IsMember(realq::suites::suite_names()));
  check->add_option("--out", out, "report path (default: stdout)");
  check->add_option("--csv", csv, "also write a CSV summary");

  std::string direction;
  std::string input;
  std::string kind = "operator";
  auto* map = app.add_subcommand("map", "convert between complex and realified matrix files");
  map->add_option("direction", direction, "realify or complexify")
      ->required()
      ->check(CLI::IsMember({"realify", "complexify"}));
  map->add_option("input", input, "input file")->required();
  map->add_option("--kind", kind, "operator, state or ket")->check(CLI::IsMember({"operator", "state", "ket"}));
  map->add_option("--out", out, "output path (default: stdout)");

  std::string demo_name;
  std::uint64_t demo_seed = 0;
  std::vector<int> demo_dims = {2, 2};
  int demo_trials = 100;
  int shots = 0;
  double demo_tol = realq::kAgreementTol;
  auto* demo = app.add_subcommand("demo", "run one scenario and write its report");
  demo->add_option("name", demo_name, "swap, nonlocal, born2 or counterexample")
      ->required()
      ->check(CLI::IsMember({"swap", "nonlocal", "born2", "counterexample"}));
  demo->add_option("--seed", demo_seed, "random seed");
  demo->add_option("--dims", demo_dims, "d1,d2 for born2 and counterexample")->delimiter(',')->check(CLI::Range(1, 32));
  demo->add_option("--trials", demo_trials, "trials for born2")->check(CLI::PositiveNumber);
  demo->add_option("--shots", shots, "sampled shots for swap")->check(CLI::NonNegativeNumber);
  demo->add_option("--tol", demo_tol, "oracle-agreement tolerance")->check(CLI::PositiveNumber);
  demo->add_option("--out", out, "report path (default: stdout)");
  demo->add_option("--csv", csv, "also write a CSV summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      if (!suite.empty()) config.suite = suite;
      config.output_path = out;
      realq::suites::validate(config);
      return emit_report(realq::suites::run_check(config), out, csv);
    }
    if (*map) return run_map(direction, input, out, kind);
    if (*demo) {
      const int d1 = demo_dims.at(0);
      const int d2 = demo_dims.size() > 1 ? demo_dims[1] : d1;
      realq::ExperimentReport report;
      if (demo_name == "swap") {
        report = realq::scenarios::entanglement_swapping_demo(demo_seed, shots, demo_tol);
      } else if (demo_name == "nonlocal") {
        report = realq::scenarios::nonlocal_operation_demo(demo_seed, demo_tol);
      } else if (demo_name == "born2") {
        report = realq::scenarios::two_source_born_check(d1, d2, demo_trials, demo_seed, demo_tol);
      } else {
        report = realq::counterexample_report(d1, d2, demo_seed);
      }
      return emit_report(report, out, csv);
    }
  } catch (const realq::BlockStructureViolation& e) {
    std::cerr << "error: " << e.what() << " (max asymmetry " << e.max_asymmetry << ")\n";
    return kExitFail;
  } catch (const realq::io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const realq::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const realq::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return *map ? kExitFail : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
