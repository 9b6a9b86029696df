#pragma once

// End-to-end simulations that run the same physics through the complex
// oracle and through the realified pipeline, then compare.

#include <cstdint>

#include "realq/oracle.hpp"
#include "realq/report.hpp"

namespace realq::scenarios {

struct TwoSourcePrediction {
  double oracle = 0.0;         // Tr(E1(rho1) (x) E2(rho2) . O1 (x) O2)
  double real = 0.0;           // same, realified with the modified tensor product
  double naive_product = 0.0;  // plain Kronecker of realified factors
};

/// One evaluation of the two-independent-source prediction in all three ways.
TwoSourcePrediction two_source_prediction(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                                          const oracle::KrausChannel& e1, const oracle::KrausChannel& e2,
                                          const ComplexMatrix& o1, const ComplexMatrix& o2);

ExperimentReport two_source_born_check(int d1, int d2, int trials, std::uint64_t seed,
                                       double tol = kAgreementTol);

/// The source state (|00> + i|11>) / sqrt(2).
ComplexMatrix swap_source_state();

/// Bell vectors in the order Phi+, Phi-, Psi+, Psi-.
ComplexMatrix bell_vector(int index);

/// Two sources, Bell measurement on the middle pair, Pauli measurements on
/// the outer qubits. With shots > 0 the real-pipeline distribution for the
/// Z/Z setting is also sampled and an empirical distance reported.
ExperimentReport entanglement_swapping_demo(std::uint64_t seed, int shots = 0,
                                            double tol = kAgreementTol);

/// Alice holds a1 entangled with a2; Bob entangles a2 with his b; Alice then
/// applies a local phase gate to a1.
ExperimentReport nonlocal_operation_demo(std::uint64_t seed, double tol = kAgreementTol);

}  // namespace realq::scenarios
