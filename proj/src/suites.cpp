#include "realq/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "realq/composite.hpp"
#include "realq/oracle.hpp"
#include "realq/real_algebra.hpp"
#include "realq/realify.hpp"
#include "realq/scenarios.hpp"

namespace realq::suites {

namespace {

using oracle::SampleKind;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct Trial {
  std::uint64_t seed;
  int d;
  int d2;
  std::uint64_t sub(std::uint64_t k) const { return oracle::derive_seed(seed, k); }
};

Trial trial(const RunConfig& c, int t) {
  const auto n = c.dims.size();
  const auto i = static_cast<std::size_t>(t);
  return {c.seed ^ static_cast<std::uint64_t>(t), c.dims[i % n], c.dims[(i + 1) % n]};
}

ExperimentReport start(const std::string& name, const RunConfig& c) {
  ExperimentReport r;
  r.name = name;
  r.seed = c.seed;
  r.params["trials"] = std::to_string(c.trials);
  return r;
}

void record(ExperimentReport& r, const std::string& key, double value, double bound) {
  r.metrics[key] = value;
  r.metrics[key + "_bound"] = bound;
  r.verdicts[key + "_ok"] = value <= bound;
}

ExperimentReport roundtrip(const RunConfig& c) {
  auto r = start("roundtrip", c);
  double round = 0.0, dagger = 0.0;
  bool iff = true;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    const ComplexMatrix a = oracle::sample(SampleKind::generic, tr.d, tr.sub(0));
    const auto m = realify_operator(a);
    round = std::max(round, oracle::max_abs(complexify(m) - a));
    const ComplexMatrix a_dagger = a.adjoint();
    dagger = std::max(dagger, max_abs(realify_operator(a_dagger).matrix() - m.matrix().transpose()));

    const ComplexMatrix u = oracle::sample(SampleKind::unitary, tr.d, tr.sub(1));
    const ComplexMatrix perturbed = u + 1e-3 * oracle::sample(SampleKind::generic, tr.d, tr.sub(2));
    for (const ComplexMatrix* x : {&u, &perturbed}) {
      const bool unitary = oracle::is_unitary(*x, 1e-10);
      const bool orthogonal = orthogonality_defect(realify_operator(*x).matrix()) <= 1e-10;
      iff = iff && unitary == orthogonal;
    }
    iff = iff && oracle::is_unitary(u, 1e-12);
  }
  const ComplexMatrix unit_i = ComplexMatrix::Constant(1, 1, Complex(0, 1));
  const auto j = realify_operator(unit_i);
  const RealMatrix j_squared = real_mul(j, j).matrix();

  record(r, "roundtrip_max_abs_error", round, 1e-14);
  record(r, "dagger_transpose_max_abs_error", dagger, 1e-14);
  r.verdicts["orthogonal_iff_unitary"] = iff;
  r.verdicts["j_squared_is_minus_identity"] = j_squared == -RealMatrix::Identity(2, 2);
  return r;
}

ExperimentReport homomorphism(const RunConfig& c) {
  auto r = start("homomorphism", c);
  double add = 0.0, mul = 0.0, closure = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    const ComplexMatrix v1 = oracle::sample(SampleKind::generic, tr.d, tr.sub(0));
    const ComplexMatrix v2 = oracle::sample(SampleKind::generic, tr.d, tr.sub(1));
    const auto sum = real_add(realify_operator(v1), realify_operator(v2));
    const auto prod = real_mul(realify_operator(v2), realify_operator(v1));
    const ComplexMatrix v_sum = v1 + v2;
    const ComplexMatrix v_prod = v2 * v1;
    add = std::max(add, max_abs(sum.matrix() - realify_operator(v_sum).matrix()));
    mul = std::max(mul, max_abs(prod.matrix() - realify_operator(v_prod).matrix()));
    closure = std::max({closure, block_asymmetry(sum.matrix()), block_asymmetry(prod.matrix())});
  }
  record(r, "add_max_abs_error", add, 1e-14);
  record(r, "mul_max_abs_error", mul, 1e-13);
  record(r, "closure_max_asymmetry", closure, 1e-12);
  return r;
}

ExperimentReport trace_norm(const RunConfig& c) {
  auto r = start("trace_norm", c);
  double norm = 0.0, trace = 0.0, from_ket = 0.0, inner = 0.0, oracle_channel = 0.0, real_channel = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    const ComplexMatrix psi = oracle::sample(SampleKind::pure, tr.d, tr.sub(0));
    const ComplexMatrix phi = oracle::sample(SampleKind::pure, tr.d, tr.sub(1));
    const auto psi_r = realify_ket(psi, true);
    const auto phi_r = realify_ket(phi, true);
    norm = std::max(norm, std::abs(psi_r.norm() - psi.norm()));
    from_ket = std::max(from_ket, max_abs(realified_density_from_ket(psi_r).matrix() -
                                          realify_state(oracle::projector(psi)).matrix()));
    const Complex expected = (phi.adjoint() * psi)(0, 0);
    inner = std::max(inner, std::abs(inner_product(phi_r, psi_r) - expected));

    const ComplexMatrix rho = oracle::sample(SampleKind::density, tr.d, tr.sub(2));
    const auto rho_r = realify_state(rho);
    trace = std::max(trace, std::abs(rho_r.trace() - 1.0));

    const auto channel = oracle::sample_channel(tr.d, 3, tr.sub(3));
    oracle_channel = std::max(oracle_channel, std::abs(oracle::apply_channel(channel, rho).trace() - rho.trace()));
    std::vector<RealifiedOperator<double>> kraus;
    for (const auto& k : channel.kraus_ops()) kraus.push_back(realify_operator(k));
    const RealifiedChannel<double> real(std::move(kraus), 1e-9);
    real_channel = std::max(real_channel, std::abs(real_apply_channel(real, rho_r).trace() - 1.0));
  }
  record(r, "ket_norm_error", norm, 1e-12);
  record(r, "state_trace_error", trace, 1e-12);
  record(r, "density_from_ket_max_abs_error", from_ket, 1e-12);
  record(r, "inner_product_max_abs_error", inner, 1e-12);
  record(r, "oracle_channel_trace_error", oracle_channel, 1e-10);
  record(r, "real_channel_trace_error", real_channel, 1e-10);
  return r;
}

ExperimentReport born(const RunConfig& c) {
  auto r = start("born", c);
  double born = 0.0, evolve = 0.0, channel_error = 0.0, imag_obs = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    const ComplexMatrix rho = oracle::sample(SampleKind::density, tr.d, tr.sub(0));
    ComplexMatrix obs = oracle::sample_hermitian(tr.d, tr.sub(1));
    // Every other trial uses a purely imaginary Hermitian observable.
    if (t % 2 == 1) obs = Complex(0, 1) * obs.imag().cast<Complex>();
    imag_obs = std::max(imag_obs, obs.imag().cwiseAbs().maxCoeff());
    const auto rho_r = realify_state(rho);
    born = std::max(born, std::abs(real_expectation(rho_r, realify_operator(obs)) - oracle::expectation(rho, obs)));

    const ComplexMatrix u = oracle::sample(SampleKind::unitary, tr.d, tr.sub(2));
    const ComplexMatrix evolved = u * rho * u.adjoint();
    evolve = std::max(evolve, max_abs(real_evolve(rho_r, realify_operator(u)).matrix() -
                                      realify_state(evolved, 1e-9).matrix()));

    const auto ch = oracle::sample_channel(tr.d, 3, tr.sub(3));
    std::vector<RealifiedOperator<double>> kraus;
    for (const auto& k : ch.kraus_ops()) kraus.push_back(realify_operator(k));
    const RealifiedChannel<double> real(std::move(kraus), 1e-9);
    channel_error = std::max(channel_error, max_abs(real_apply_channel(real, rho_r).matrix() -
                                                    realify_state(oracle::apply_channel(ch, rho), 1e-9).matrix()));
  }
  record(r, "born_max_abs_error", born, 1e-11);
  record(r, "evolve_max_abs_error", evolve, 1e-12);
  record(r, "channel_max_abs_error", channel_error, 1e-12);
  r.metrics["max_observable_imag"] = imag_obs;
  return r;
}

ExperimentReport parity(const RunConfig& c) {
  auto r = start("parity", c);
  double err = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    ComplexMatrix psi = oracle::sample(SampleKind::pure, tr.d, tr.sub(0));
    ComplexMatrix phi = oracle::sample(SampleKind::pure, tr.d2, tr.sub(1));
    if (t % 4 == 3) {
      psi = Complex(0, 1) * psi.real().normalized().cast<Complex>();
      phi = Complex(0, 1) * phi.real().normalized().cast<Complex>();
    }
    const auto raw = RawPairKet<double>::from_kron(kron(realify_ket(psi).data(), realify_ket(phi).data()), tr.d, tr.d2);
    err = std::max(err, (parity_contract(raw).data() - realify_ket(oracle::tensor(psi, phi)).data()).cwiseAbs().maxCoeff());
  }
  record(r, "parity_max_abs_error", err, 1e-13);
  return r;
}

ExperimentReport modified_tensor(const RunConfig& c) {
  auto r = start("modified_tensor", c);
  double op = 0.0, route = 0.0, state = 0.0, assoc = 0.0, mult = 0.0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    const ComplexMatrix v1 = oracle::sample(SampleKind::generic, tr.d, tr.sub(0));
    const ComplexMatrix v2 = oracle::sample(SampleKind::generic, tr.d2, tr.sub(1));
    const ComplexMatrix v12 = oracle::tensor(v1, v2);
    const auto m = modified_tensor_operator(realify_operator(v1), realify_operator(v2));
    op = std::max(op, max_abs(m.matrix() - realify_operator(v12).matrix()));
    route = std::max(route, oracle::max_abs(complexify(m) - v12));

    const ComplexMatrix rho1 = oracle::sample(SampleKind::density, tr.d, tr.sub(2));
    const ComplexMatrix rho2 = oracle::sample(SampleKind::density, tr.d2, tr.sub(3));
    const auto s = modified_tensor_state(realify_state(rho1), realify_state(rho2));
    state = std::max(state, max_abs(s.matrix() - realify_state(oracle::tensor(rho1, rho2), 1e-9).matrix()));

    const int small = std::min(tr.d, 3);
    const ComplexMatrix w1 = oracle::sample(SampleKind::generic, small, tr.sub(4));
    const ComplexMatrix w2 = oracle::sample(SampleKind::generic, small, tr.sub(5));
    const ComplexMatrix w3 = oracle::sample(SampleKind::generic, small, tr.sub(6));
    const auto left = modified_tensor_operator(
        modified_tensor_operator(realify_operator(w1), realify_operator(w2)), realify_operator(w3));
    const ComplexMatrix w123 = oracle::tensor(oracle::tensor(w1, w2), w3);
    assoc = std::max(assoc, max_abs(left.matrix() - realify_operator(w123).matrix()));

    const auto a1 = realify_operator(w1), a2 = realify_operator(w2);
    const auto b1 = realify_operator(w3), b2 = realify_operator(oracle::sample(SampleKind::generic, small, tr.sub(7)));
    const auto lhs = real_mul(modified_tensor_operator(a1, b1), modified_tensor_operator(a2, b2));
    const auto rhs = modified_tensor_operator(real_mul(a1, a2), real_mul(b1, b2));
    mult = std::max(mult, max_abs(lhs.matrix() - rhs.matrix()));
  }
  record(r, "operator_max_abs_error", op, 1e-13);
  record(r, "complexify_route_max_abs_error", route, 1e-13);
  record(r, "state_max_abs_error", state, 1e-12);
  record(r, "associativity_max_abs_error", assoc, 1e-12);
  record(r, "multiplicativity_max_abs_error", mult, 1e-12);
  return r;
}

ExperimentReport witness(const RunConfig& c) {
  auto r = start("witness", c);
  int misclassified = 0;
  for (int t = 0; t < c.trials; ++t) {
    const auto tr = trial(c, t);
    for (const ComplexMatrix& a : {oracle::sample(SampleKind::generic, tr.d, tr.sub(0)),
                                   oracle::sample_real(tr.d, tr.sub(1))}) {
      const bool expected = a.imag().cwiseAbs().maxCoeff() > kWitnessTol;
      if (ancilla_witness(realify_operator(a)).uses_shared_ancilla != expected) ++misclassified;
    }
  }
  r.metrics["misclassified"] = misclassified;
  r.verdicts["no_misclassification"] = misclassified == 0;
  return r;
}

ExperimentReport naive_tensor_suite(const RunConfig& c) {
  auto r = start("naive_tensor", c);
  bool incompatible = true, repaired = true;
  for (int d1 : c.dims) {
    for (int d2 : c.dims) {
      const auto rep = counterexample_report(d1, d2, oracle::derive_seed(c.seed, static_cast<std::uint64_t>(d1 * 64 + d2)));
      incompatible = incompatible && rep.verdicts.at("incompatible") &&
                     rep.metrics.at("naive_dim") == 4.0 * d1 * d2 &&
                     rep.metrics.at("realified_tensor_dim") == 2.0 * d1 * d2;
      repaired = repaired && rep.verdicts.at("parity_repair_agrees") && rep.verdicts.at("modified_tensor_agrees");
    }
  }
  r.verdicts["always_incompatible"] = incompatible;
  r.verdicts["repairs_agree"] = repaired;
  return r;
}

ExperimentReport two_source(const RunConfig& c) {
  const int d1 = std::max(2, c.dims[0]);
  const int d2 = std::max(2, c.dims[1 % c.dims.size()]);
  return scenarios::two_source_born_check(d1, d2, c.trials, c.seed, c.tolerance);
}

using SuiteFn = std::function<ExperimentReport(const RunConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"roundtrip", roundtrip},
      {"homomorphism", homomorphism},
      {"trace_norm", trace_norm},
      {"born", born},
      {"parity", parity},
      {"modified_tensor", modified_tensor},
      {"witness", witness},
      {"naive_tensor", naive_tensor_suite},
      {"two_source", two_source},
      {"swap", [](const RunConfig& c) { return scenarios::entanglement_swapping_demo(c.seed, 0, c.tolerance); }},
      {"nonlocal", [](const RunConfig& c) { return scenarios::nonlocal_operation_demo(c.seed, c.tolerance); }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

void validate(const RunConfig& config) {
  if (config.dims.empty()) throw InvalidArgument("dims must not be empty");
  for (int d : config.dims) {
    if (d < 1 || d > 32) throw InvalidArgument("dims must lie in 1..32");
  }
  if (config.trials < 1) throw InvalidArgument("trials must be at least 1");
  if (!(config.tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (config.suite && registry().count(*config.suite) == 0) {
    throw InvalidArgument("unknown suite '" + *config.suite + "'");
  }
}

ExperimentReport run_suite(const std::string& name, const RunConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + name + "'");
  return it->second(config);
}

ExperimentReport run_check(const RunConfig& config) {
  validate(config);
  ExperimentReport report;
  report.name = "check";
  report.seed = config.seed;
  std::string dims;
  for (int d : config.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  report.params = {{"dims", dims},
                   {"trials", std::to_string(config.trials)},
                   {"tolerance", format_double(config.tolerance)},
                   {"suite", config.suite.value_or("all")}};
  for (const auto& name : suite_names()) {
    if (config.suite && *config.suite != name) continue;
    const auto sub = run_suite(name, config);
    report.merge(name, sub);
    report.verdicts[name + "/passed"] = sub.passed();
  }
  return report;
}

}  // namespace realq::suites
