#pragma once

// Reference complex-number quantum theory. Everything in the real-number
// pipeline is differentially tested against the functions in this header.

#include <cstdint>
#include <string_view>
#include <vector>

#include "realq/types.hpp"

namespace realq::oracle {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kStructuralTol);
/// Hermitian, unit trace and no eigenvalue below -tol.
bool is_density_matrix(const ComplexMatrix& m, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix& m, double tol = kStructuralTol);

/// Completely positive trace-preserving map given by Kraus operators.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops, double tol = kStructuralTol);

  static KrausChannel identity(Eigen::Index d);

  Eigen::Index dim() const { return kraus_ops_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_ops_; }

 private:
  std::vector<ComplexMatrix> kraus_ops_;
};

/// Tr(rho O). Throws InvalidArgument if the imaginary residue exceeds tol.
double expectation(const ComplexMatrix& rho, const ComplexMatrix& observable,
                   double tol = kStructuralTol);

ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& rho);

enum class SampleKind { unitary, density, pure, generic };

SampleKind parse_sample_kind(std::string_view name);

/// Seeded random ensembles. Unitaries are Haar distributed (QR of a Ginibre
/// matrix with phase-fixed R), densities are GG^dagger / Tr(GG^dagger), pure
/// states are normalized Gaussian columns, generic matrices have standard
/// complex Gaussian entries (E|z|^2 = 1).
ComplexMatrix sample(SampleKind kind, Eigen::Index d, std::uint64_t seed);

ComplexMatrix sample_hermitian(Eigen::Index d, std::uint64_t seed);
ComplexMatrix sample_real(Eigen::Index d, std::uint64_t seed);
KrausChannel sample_channel(Eigen::Index d, int num_kraus, std::uint64_t seed);

/// SplitMix64 step; used to derive independent streams from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Frequently used fixed matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
ComplexMatrix phase_gate();
ComplexMatrix ket(Eigen::Index d, Eigen::Index index);
ComplexMatrix projector(const ComplexMatrix& psi);

}  // namespace realq::oracle
