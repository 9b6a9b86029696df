#include "realq/composite.hpp"

#include <string>

#include "realq/oracle.hpp"

namespace realq {

ExperimentReport counterexample_report(int d1, int d2, std::uint64_t seed) {
  if (d1 < 1 || d2 < 1) throw InvalidArgument("counterexample_report: dimensions must be positive");

  ExperimentReport report;
  report.name = "counterexample";
  report.seed = seed;
  report.params = {{"d1", std::to_string(d1)}, {"d2", std::to_string(d2)}};

  using oracle::SampleKind;
  const ComplexMatrix v1 = oracle::sample(SampleKind::generic, d1, oracle::derive_seed(seed, 0));
  const ComplexMatrix v2 = oracle::sample(SampleKind::generic, d2, oracle::derive_seed(seed, 1));
  const auto m1 = realify_operator(v1);
  const auto m2 = realify_operator(v2);

  const auto realified_tensor = realify_operator(oracle::tensor(v1, v2));
  const RealMatrix naive = naive_tensor(m1, m2);
  const auto modified = modified_tensor_operator(m1, m2);

  const auto naive_dim = naive.rows();
  const auto realified_dim = realified_tensor.matrix().rows();
  report.metrics["naive_dim"] = static_cast<double>(naive_dim);
  report.metrics["realified_tensor_dim"] = static_cast<double>(realified_dim);
  report.metrics["v1_imag_max_abs"] = v1.imag().cwiseAbs().maxCoeff();
  report.metrics["v2_imag_max_abs"] = v2.imag().cwiseAbs().maxCoeff();

  const double modified_error = (modified.matrix() - realified_tensor.matrix()).cwiseAbs().maxCoeff();
  report.metrics["modified_tensor_max_abs_error"] = modified_error;

  // Ket-level repair: contract the two flags of the plain product.
  const ComplexMatrix psi = oracle::sample(SampleKind::pure, d1, oracle::derive_seed(seed, 2));
  const ComplexMatrix phi = oracle::sample(SampleKind::pure, d2, oracle::derive_seed(seed, 3));
  const auto raw = RawPairKet<double>::from_product(realify_ket(psi), realify_ket(phi));
  const auto contracted = parity_contract(raw);
  const auto expected = realify_ket(oracle::tensor(psi, phi));
  const double parity_error = (contracted.data() - expected.data()).cwiseAbs().maxCoeff();
  report.metrics["raw_pair_ket_dim"] = static_cast<double>(raw.data().size());
  report.metrics["parity_repair_max_abs_error"] = parity_error;

  report.verdicts["incompatible"] = naive_dim != realified_dim;
  report.verdicts["modified_tensor_agrees"] = modified_error <= 1e-13;
  report.verdicts["parity_repair_agrees"] = parity_error <= 1e-13;
  return report;
}

}  // namespace realq
