#pragma once

// Single-system algebra on realified matrices. The complex dagger is the
// transpose here, so nothing below touches complex arithmetic.

#include <limits>
#include <vector>

#include "realq/realify.hpp"

namespace realq {

template <typename Scalar>
Scalar orthogonality_defect(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<Scalar>::infinity();
  return (m.transpose() * m - Matrix<Scalar>::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// max of |Re - Re^T| and |Im + Im^T|; zero iff the preimage is Hermitian.
template <typename Scalar>
Scalar hermiticity_defect(const RealifiedOperator<Scalar>& o) {
  if (o.rows() != o.cols()) return std::numeric_limits<Scalar>::infinity();
  const Scalar sym = (o.re() - o.re().transpose()).cwiseAbs().maxCoeff();
  const Scalar anti = (o.im() + o.im().transpose()).cwiseAbs().maxCoeff();
  return std::max(sym, anti);
}

template <typename Scalar>
RealifiedOperator<Scalar> real_add(const RealifiedOperator<Scalar>& m, const RealifiedOperator<Scalar>& n) {
  if (m.matrix().rows() != n.matrix().rows() || m.matrix().cols() != n.matrix().cols()) {
    throw DimensionMismatch("real_add: shape mismatch");
  }
  return RealifiedOperator<Scalar>(m.matrix() + n.matrix(), trusted);
}

template <typename Scalar>
RealifiedOperator<Scalar> real_mul(const RealifiedOperator<Scalar>& m, const RealifiedOperator<Scalar>& n) {
  if (m.matrix().cols() != n.matrix().rows()) throw DimensionMismatch("real_mul: inner dimensions differ");
  return RealifiedOperator<Scalar>(m.matrix() * n.matrix(), trusted);
}

template <typename Scalar>
RealifiedOperator<Scalar> real_transpose(const RealifiedOperator<Scalar>& m) {
  return RealifiedOperator<Scalar>(m.matrix().transpose(), trusted);
}

/// U rho U^T for the realification of a unitary U.
template <typename Scalar>
RealifiedState<Scalar> real_evolve(const RealifiedState<Scalar>& rho, const RealifiedOperator<Scalar>& u,
                                   Scalar tol = Scalar(kStructuralTol)) {
  if (u.matrix().rows() != rho.matrix().rows() || u.matrix().cols() != rho.matrix().cols()) {
    throw DimensionMismatch("real_evolve: operator and state dimensions differ");
  }
  if (orthogonality_defect(u.matrix()) > tol) throw InvalidArgument("real_evolve: operator is not orthogonal");
  return RealifiedState<Scalar>(u.matrix() * rho.matrix() * u.matrix().transpose(), trusted);
}

template <typename Scalar = double>
class RealifiedChannel {
 public:
  /// Requires sum_j K_j^T K_j = I.
  explicit RealifiedChannel(std::vector<RealifiedOperator<Scalar>> kraus_ops,
                            Scalar tol = Scalar(kStructuralTol))
      : kraus_ops_(std::move(kraus_ops)) {
    if (kraus_ops_.empty()) throw InvalidArgument("realified channel needs at least one Kraus operator");
    const Eigen::Index n = kraus_ops_.front().matrix().rows();
    Matrix<Scalar> completeness = Matrix<Scalar>::Zero(n, n);
    for (const auto& k : kraus_ops_) {
      if (k.matrix().rows() != n || k.matrix().cols() != n) {
        throw DimensionMismatch("realified Kraus operators must share one square shape");
      }
      completeness += k.matrix().transpose() * k.matrix();
    }
    if ((completeness - Matrix<Scalar>::Identity(n, n)).cwiseAbs().maxCoeff() > tol) {
      throw InvalidArgument("realified Kraus operators are not trace preserving");
    }
  }

  /// Complex dimension of the system acted on.
  Eigen::Index dim() const { return kraus_ops_.front().rows(); }
  const std::vector<RealifiedOperator<Scalar>>& kraus_ops() const { return kraus_ops_; }

 private:
  std::vector<RealifiedOperator<Scalar>> kraus_ops_;
};

template <typename Scalar>
RealifiedState<Scalar> real_apply_channel(const RealifiedChannel<Scalar>& channel,
                                          const RealifiedState<Scalar>& rho) {
  if (channel.dim() != rho.dim()) throw DimensionMismatch("real_apply_channel: dimension mismatch");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& k : channel.kraus_ops()) out += k.matrix() * rho.matrix() * k.matrix().transpose();
  return RealifiedState<Scalar>(std::move(out), trusted);
}

/// Tr(rho O). O must be the realification of a Hermitian matrix.
template <typename Scalar>
Scalar real_expectation(const RealifiedState<Scalar>& rho, const RealifiedOperator<Scalar>& o,
                        Scalar tol = Scalar(kStructuralTol)) {
  if (o.rows() != rho.dim() || o.cols() != rho.dim()) throw DimensionMismatch("real_expectation: dimension mismatch");
  if (hermiticity_defect(o) > tol) throw InvalidArgument("real_expectation: observable preimage is not Hermitian");
  // Tr(AB) without forming the product.
  return rho.matrix().cwiseProduct(o.matrix().transpose()).sum();
}

}  // namespace realq
