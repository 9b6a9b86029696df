#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace realq {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrixT = Matrix<std::complex<Scalar>>;

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Default thresholds.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kBlockTol = 1e-9;
inline constexpr double kWitnessTol = 1e-10;
inline constexpr double kAgreementTol = 1e-9;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised by the Map_C direction when the input is not of the form
/// [[R, -S], [S, R]]. Carries the largest block mismatch that was found.
struct BlockStructureViolation : std::domain_error {
  explicit BlockStructureViolation(double max_asymmetry)
      : std::domain_error("block structure violated, max asymmetry " +
                          std::to_string(max_asymmetry)),
        max_asymmetry(max_asymmetry) {}
  double max_asymmetry;
};

}  // namespace realq
