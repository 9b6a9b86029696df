#include "realq/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "realq/composite.hpp"
#include "realq/real_algebra.hpp"
#include "realq/realify.hpp"

namespace realq::scenarios {

namespace {

RealifiedChannel<double> realify_channel(const oracle::KrausChannel& channel) {
  std::vector<RealifiedOperator<double>> ops;
  for (const auto& k : channel.kraus_ops()) ops.push_back(realify_operator(k));
  return RealifiedChannel<double>(std::move(ops), 1e-9);
}

// Eigenprojector of a Pauli matrix for outcome +1 (sign 0) or -1 (sign 1).
ComplexMatrix pauli_projector(const ComplexMatrix& pauli, int sign) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return 0.5 * (id + (sign == 0 ? 1.0 : -1.0) * pauli);
}

ComplexMatrix pauli_by_index(int index) {
  switch (index) {
    case 0: return oracle::pauli_x();
    case 1: return oracle::pauli_y();
    default: return oracle::pauli_z();
  }
}

ComplexMatrix pauli_or_identity(int index) {
  return index == 0 ? ComplexMatrix::Identity(2, 2) : pauli_by_index(index - 1);
}

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

struct DistributionCheck {
  double min = 0.0;
  double sum_error = 0.0;
};

DistributionCheck check_distribution(const std::vector<double>& p) {
  DistributionCheck c;
  c.min = *std::min_element(p.begin(), p.end());
  double sum = 0.0;
  for (double x : p) sum += x;
  c.sum_error = std::abs(sum - 1.0);
  return c;
}

}  // namespace

TwoSourcePrediction two_source_prediction(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                                          const oracle::KrausChannel& e1, const oracle::KrausChannel& e2,
                                          const ComplexMatrix& o1, const ComplexMatrix& o2) {
  TwoSourcePrediction out;
  const ComplexMatrix out1 = oracle::apply_channel(e1, rho1);
  const ComplexMatrix out2 = oracle::apply_channel(e2, rho2);
  out.oracle = oracle::expectation(oracle::tensor(out1, out2), oracle::tensor(o1, o2), 1e-9);

  const auto real1 = real_apply_channel(realify_channel(e1), realify_state(rho1));
  const auto real2 = real_apply_channel(realify_channel(e2), realify_state(rho2));
  const auto obs1 = realify_operator(o1);
  const auto obs2 = realify_operator(o2);
  out.real = real_expectation(modified_tensor_state(real1, real2), modified_tensor_operator(obs1, obs2), 1e-9);

  // Without interaction the plain product also works: it factorizes into the
  // two local expectation values.
  const RealMatrix joint = kron(real1.matrix(), real2.matrix());
  const RealMatrix joint_obs = kron(obs1.matrix(), obs2.matrix());
  out.naive_product = joint.cwiseProduct(joint_obs.transpose()).sum();
  return out;
}

ExperimentReport two_source_born_check(int d1, int d2, int trials, std::uint64_t seed, double tol) {
  if (d1 < 2 || d2 < 2) throw InvalidArgument("two_source_born_check: dimensions must be at least 2");
  if (trials < 1) throw InvalidArgument("two_source_born_check: trials must be at least 1");

  ExperimentReport report;
  report.name = "born2";
  report.seed = seed;
  report.params = {{"d1", std::to_string(d1)}, {"d2", std::to_string(d2)}, {"trials", std::to_string(trials)}};

  // Trials are independent; each derives its own seed from its index.
  std::vector<TwoSourcePrediction> results(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed ^ static_cast<std::uint64_t>(t);
    auto sub = [&](std::uint64_t k) { return oracle::derive_seed(trial_seed, k); };
    using oracle::SampleKind;
    results[static_cast<std::size_t>(t)] = two_source_prediction(
        oracle::sample(SampleKind::density, d1, sub(0)), oracle::sample(SampleKind::density, d2, sub(1)),
        oracle::sample_channel(d1, 3, sub(2)), oracle::sample_channel(d2, 2, sub(3)),
        oracle::sample_hermitian(d1, sub(4)), oracle::sample_hermitian(d2, sub(5)));
  }

  double max_error = 0.0;
  double max_naive_error = 0.0;
  for (const auto& r : results) {
    max_error = std::max(max_error, std::abs(r.real - r.oracle));
    max_naive_error = std::max(max_naive_error, std::abs(r.naive_product - r.oracle));
  }
  report.metrics["max_abs_error"] = max_error;
  report.metrics["naive_product_max_abs_error"] = max_naive_error;
  report.metrics["tolerance"] = tol;
  report.verdicts["pass"] = max_error <= tol;
  report.verdicts["naive_product_agrees"] = max_naive_error <= tol;
  return report;
}

ComplexMatrix swap_source_state() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 1);
  s(0, 0) = 1.0 / std::sqrt(2.0);
  s(3, 0) = Complex(0.0, 1.0 / std::sqrt(2.0));
  return s;
}

ComplexMatrix bell_vector(int index) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix v = ComplexMatrix::Zero(4, 1);
  switch (index) {
    case 0: v(0, 0) = h; v(3, 0) = h; break;
    case 1: v(0, 0) = h; v(3, 0) = -h; break;
    case 2: v(1, 0) = h; v(2, 0) = h; break;
    case 3: v(1, 0) = h; v(2, 0) = -h; break;
    default: throw InvalidArgument("bell_vector: index must be 0..3");
  }
  return v;
}

ExperimentReport entanglement_swapping_demo(std::uint64_t seed, int shots, double tol) {
  ExperimentReport report;
  report.name = "swap";
  report.seed = seed;
  report.params = {{"shots", std::to_string(shots)},
                   {"source", "(|00>+i|11>)/sqrt2"},
                   {"order", "a1,a2,b1,b2"}};

  const ComplexMatrix source = oracle::projector(swap_source_state());
  const ComplexMatrix joint = oracle::tensor(source, source);
  const auto real_source = realify_state(source);
  const auto real_joint = modified_tensor_state(real_source, real_source);

  std::array<RealifiedOperator<double>, 4> real_bell;
  std::array<ComplexMatrix, 4> bell;
  for (int k = 0; k < 4; ++k) {
    bell[k] = oracle::projector(bell_vector(k));
    real_bell[k] = realify_operator(bell[k]);
  }

  double max_tv = 0.0;
  double worst_min = 1.0;
  double worst_sum = 0.0;
  double marginal_spread = 0.0;
  std::array<double, 4> marginal_zz{};
  std::vector<double> zz_distribution;

  for (int pa = 0; pa < 3; ++pa) {
    for (int pb = 0; pb < 3; ++pb) {
      std::vector<double> p_oracle;
      std::vector<double> p_real;
      std::array<double, 4> marginal{};
      for (int k = 0; k < 4; ++k) {
        for (int sa = 0; sa < 2; ++sa) {
          for (int sb = 0; sb < 2; ++sb) {
            const ComplexMatrix proj_a = pauli_projector(pauli_by_index(pa), sa);
            const ComplexMatrix proj_b = pauli_projector(pauli_by_index(pb), sb);
            const ComplexMatrix effect = oracle::tensor(oracle::tensor(proj_a, bell[k]), proj_b);
            p_oracle.push_back(oracle::expectation(joint, effect));

            const auto real_effect = modified_tensor_operator(
                modified_tensor_operator(realify_operator(proj_a), real_bell[k]), realify_operator(proj_b));
            const double p = real_expectation(real_joint, real_effect);
            p_real.push_back(p);
            marginal[k] += p;
          }
        }
      }
      double tv = 0.0;
      for (std::size_t i = 0; i < p_real.size(); ++i) tv += std::abs(p_real[i] - p_oracle[i]);
      max_tv = std::max(max_tv, 0.5 * tv);
      for (const auto* dist : {&p_oracle, &p_real}) {
        const auto c = check_distribution(*dist);
        worst_min = std::min(worst_min, c.min);
        worst_sum = std::max(worst_sum, c.sum_error);
      }
      if (pa == 2 && pb == 2) {
        marginal_zz = marginal;
        zz_distribution = p_real;
      }
      for (int k = 0; k < 4; ++k) marginal_spread = std::max(marginal_spread, std::abs(marginal[k] - 0.25));
    }
  }

  for (int k = 0; k < 4; ++k) report.metrics["bell_marginal_" + std::to_string(k)] = marginal_zz[k];
  report.metrics["bell_marginal_max_deviation"] = marginal_spread;
  report.metrics["tv_distance"] = max_tv;
  report.metrics["min_probability"] = worst_min;
  report.metrics["max_sum_error"] = worst_sum;
  report.metrics["tolerance"] = tol;

  // The plain product of the two realified sources has one flag per source.
  const RealMatrix naive = kron(real_source.matrix(), real_source.matrix());
  report.metrics["naive_dim"] = static_cast<double>(naive.rows());
  report.metrics["realified_dim"] = static_cast<double>(real_joint.matrix().rows());
  report.metrics["source_imag_max_abs"] = source.imag().cwiseAbs().maxCoeff();

  report.verdicts["bell_marginal_uniform"] = marginal_spread <= 1e-10;
  report.verdicts["tv_within_tolerance"] = max_tv <= tol;
  report.verdicts["distributions_valid"] = worst_min >= -1e-10 && worst_sum <= 1e-10;
  report.verdicts["naive_incompatible"] = naive.rows() != real_joint.matrix().rows();

  if (shots > 0) {
    std::vector<double> weights;
    for (double p : zz_distribution) weights.push_back(std::max(p, 0.0));
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    std::vector<double> counts(weights.size(), 0.0);
    for (int s = 0; s < shots; ++s) counts[static_cast<std::size_t>(pick(rng))] += 1.0;
    double tv = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) tv += std::abs(counts[i] / shots - zz_distribution[i]);
    report.metrics["empirical_tv_distance"] = 0.5 * tv;
  }
  return report;
}

ExperimentReport nonlocal_operation_demo(std::uint64_t seed, double tol) {
  ExperimentReport report;
  report.name = "nonlocal";
  report.seed = seed;
  report.params = {{"order", "a1,a2,b"}, {"local_gate", "diag(1,i) on a1"}, {"entangler", "CNOT a2->b"}};

  const ComplexMatrix alice = oracle::projector(swap_source_state());
  const ComplexMatrix bob = oracle::projector(oracle::sample(oracle::SampleKind::pure, 2, seed));
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  const ComplexMatrix entangle = oracle::tensor(id2, cnot());
  const ComplexMatrix local_phase = oracle::tensor(oracle::phase_gate(), id4);

  // Complex reference.
  ComplexMatrix rho = oracle::tensor(alice, bob);
  rho = entangle * rho * entangle.adjoint();
  const ComplexMatrix rho_before_local = rho;
  rho = local_phase * rho * local_phase.adjoint();

  // Real pipeline, composed with the modified tensor product.
  auto real_rho = modified_tensor_state(realify_state(alice), realify_state(bob));
  const auto real_entangle = modified_tensor_operator(realify_operator(id2), realify_operator(cnot()));
  const auto real_local = modified_tensor_operator(realify_operator(oracle::phase_gate()), realify_operator(id4));
  const auto real_local_x = modified_tensor_operator(realify_operator(oracle::pauli_x()), realify_operator(id4));
  const auto bob_phase = modified_tensor_operator(realify_operator(id4), realify_operator(oracle::phase_gate()));
  real_rho = real_evolve(real_rho, real_entangle);
  const auto real_before_local = real_rho;
  real_rho = real_evolve(real_rho, real_local);

  const auto witness_phase = ancilla_witness(real_local);
  const auto witness_x = ancilla_witness(real_local_x);
  const auto witness_bob = ancilla_witness(bob_phase);
  report.metrics["phase_gate_xz_norm"] = witness_phase.xz_component_norm;
  report.metrics["x_gate_xz_norm"] = witness_x.xz_component_norm;
  report.verdicts["phase_gate_uses_shared_ancilla"] = witness_phase.uses_shared_ancilla;
  report.verdicts["x_gate_avoids_shared_ancilla"] = !witness_x.uses_shared_ancilla;
  // Alice's and Bob's phase operations both act on the one flag factor.
  report.verdicts["alice_and_bob_share_ancilla"] =
      witness_phase.uses_shared_ancilla && witness_bob.uses_shared_ancilla;

  const double composition_error =
      (real_local.matrix() - realify_operator(local_phase).matrix()).cwiseAbs().maxCoeff();
  report.metrics["composition_max_abs_error"] = composition_error;
  report.verdicts["composition_matches_global"] = composition_error <= 1e-12;

  const RealMatrix naive_local = naive_tensor(realify_operator(oracle::phase_gate()), realify_operator(id4));
  report.metrics["naive_local_dim"] = static_cast<double>(naive_local.rows());
  report.metrics["realified_local_dim"] = static_cast<double>(real_local.matrix().rows());
  report.verdicts["naive_incompatible"] = naive_local.rows() != real_local.matrix().rows();

  // Born values for every Pauli string on (a1, a2, b), and Bob's side before
  // versus after Alice's operation.
  double max_error = 0.0;
  double max_signal = 0.0;
  for (int p1 = 0; p1 < 4; ++p1) {
    for (int p2 = 0; p2 < 4; ++p2) {
      for (int p3 = 0; p3 < 4; ++p3) {
        const ComplexMatrix obs =
            oracle::tensor(oracle::tensor(pauli_or_identity(p1), pauli_or_identity(p2)), pauli_or_identity(p3));
        const auto real_obs = realify_operator(obs);
        const double expected = oracle::expectation(rho, obs);
        max_error = std::max(max_error, std::abs(real_expectation(real_rho, real_obs) - expected));
        if (p1 == 0) {
          const double before = real_expectation(real_before_local, real_obs);
          const double after = real_expectation(real_rho, real_obs);
          max_signal = std::max(max_signal, std::abs(after - before));
          max_error = std::max(max_error, std::abs(before - oracle::expectation(rho_before_local, obs)));
        }
      }
    }
  }
  report.metrics["max_abs_error"] = max_error;
  report.metrics["remote_marginal_shift"] = max_signal;
  report.metrics["tolerance"] = tol;
  report.verdicts["oracle_agreement"] = max_error <= tol;
  report.verdicts["no_signalling"] = max_signal <= tol;
  return report;
}

}  // namespace realq::scenarios
