#pragma once

// The real/imaginary embedding of complex quantum objects and its inverse.
//
// Layout: the real/imaginary flag is the leftmost (most significant) tensor
// factor. A d-dimensional ket psi = a + i b becomes the 2d vector [a; b] and a
// complex matrix A = R + i S becomes
//
//     [[R, -S],
//      [S,  R]]  =  I (x) R + J (x) S,      J = [[0, -1], [1, 0]].
//
// Density matrices carry an extra factor 1/2 so that the trace is preserved.
// Operators and states are distinct types so that factor cannot be mixed up.

#include <algorithm>
#include <cmath>

#include "realq/types.hpp"

namespace realq {

/// Marks a matrix as already known to satisfy the block invariant.
struct trusted_t {
  explicit trusted_t() = default;
};
inline constexpr trusted_t trusted{};

/// The image of the imaginary unit, [[0, -1], [1, 0]].
template <typename Scalar = double>
Matrix<Scalar> xz() {
  Matrix<Scalar> j(2, 2);
  j << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  return j;
}

/// Largest deviation of m from the [[R, -S], [S, R]] pattern.
template <typename Derived>
typename Derived::Scalar block_asymmetry(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
    throw DimensionMismatch("realified matrices have even dimensions");
  }
  const Eigen::Index r = m.rows() / 2;
  const Eigen::Index c = m.cols() / 2;
  if (r == 0 || c == 0) return Scalar(0);
  const Scalar diag = (m.topLeftCorner(r, c) - m.bottomRightCorner(r, c)).cwiseAbs().maxCoeff();
  const Scalar off = (m.bottomLeftCorner(r, c) + m.topRightCorner(r, c)).cwiseAbs().maxCoeff();
  return std::max(diag, off);
}

template <typename Scalar = double>
class RealifiedKet {
 public:
  RealifiedKet() = default;

  /// data is [a; b]; length must be even and nonzero.
  explicit RealifiedKet(Vector<Scalar> data, bool normalized = false)
      : data_(std::move(data)), normalized_(normalized) {
    if (data_.size() == 0 || data_.size() % 2 != 0) {
      throw DimensionMismatch("realified ket needs an even, nonzero length");
    }
    if (!data_.allFinite()) throw InvalidArgument("realified ket has non-finite entries");
  }

  Eigen::Index dim() const { return data_.size() / 2; }
  const Vector<Scalar>& data() const { return data_; }
  auto re() const { return data_.head(dim()); }
  auto im() const { return data_.tail(dim()); }
  bool normalized() const { return normalized_; }
  Scalar norm() const { return data_.norm(); }

 private:
  Vector<Scalar> data_;
  bool normalized_ = false;
};

template <typename Scalar = double>
class RealifiedOperator {
 public:
  RealifiedOperator() = default;

  RealifiedOperator(Matrix<Scalar> m, trusted_t) : m_(std::move(m)) {}

  /// Validates the block invariant; throws BlockStructureViolation.
  static RealifiedOperator from_matrix(Matrix<Scalar> m, Scalar tol = Scalar(kBlockTol)) {
    if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("empty realified operator");
    if (!m.allFinite()) throw InvalidArgument("realified operator has non-finite entries");
    const Scalar asym = block_asymmetry(m);
    if (asym > tol) throw BlockStructureViolation(static_cast<double>(asym));
    return RealifiedOperator(std::move(m), trusted);
  }

  template <typename DerivedR, typename DerivedS>
  static RealifiedOperator from_blocks(const Eigen::MatrixBase<DerivedR>& re,
                                       const Eigen::MatrixBase<DerivedS>& im) {
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
      throw DimensionMismatch("real and imaginary blocks differ in shape");
    }
    const Eigen::Index r = re.rows();
    const Eigen::Index c = re.cols();
    Matrix<Scalar> m(2 * r, 2 * c);
    m.topLeftCorner(r, c) = re;
    m.topRightCorner(r, c) = -im;
    m.bottomLeftCorner(r, c) = im;
    m.bottomRightCorner(r, c) = re;
    return RealifiedOperator(std::move(m), trusted);
  }

  /// Complex row count of the preimage.
  Eigen::Index rows() const { return m_.rows() / 2; }
  Eigen::Index cols() const { return m_.cols() / 2; }
  const Matrix<Scalar>& matrix() const { return m_; }
  auto re() const { return m_.topLeftCorner(rows(), cols()); }
  auto im() const { return m_.bottomLeftCorner(rows(), cols()); }

 private:
  Matrix<Scalar> m_;
};

/// Realified density matrix, 1/2 (I (x) Re rho + J (x) Im rho).
template <typename Scalar = double>
class RealifiedState {
 public:
  RealifiedState() = default;

  RealifiedState(Matrix<Scalar> m, trusted_t) : m_(std::move(m)) {}

  /// Validates squareness, the block invariant and unit trace.
  static RealifiedState from_matrix(Matrix<Scalar> m, Scalar tol = Scalar(kBlockTol)) {
    if (m.rows() != m.cols() || m.rows() == 0) throw DimensionMismatch("realified state must be square");
    if (!m.allFinite()) throw InvalidArgument("realified state has non-finite entries");
    const Scalar asym = block_asymmetry(m);
    if (asym > tol) throw BlockStructureViolation(static_cast<double>(asym));
    if (std::abs(m.trace() - Scalar(1)) > tol) throw InvalidArgument("realified state trace is not 1");
    return RealifiedState(std::move(m), trusted);
  }

  Eigen::Index dim() const { return m_.rows() / 2; }
  const Matrix<Scalar>& matrix() const { return m_; }
  Scalar trace() const { return m_.trace(); }
  /// Re rho (twice the top-left block).
  Matrix<Scalar> re() const { return Scalar(2) * m_.topLeftCorner(dim(), dim()); }
  /// Im rho (twice the bottom-left block).
  Matrix<Scalar> im() const { return Scalar(2) * m_.bottomLeftCorner(dim(), dim()); }

  /// The same data in operator convention (no 1/2 factor).
  RealifiedOperator<Scalar> as_operator() const {
    return RealifiedOperator<Scalar>(Scalar(2) * m_, trusted);
  }

 private:
  Matrix<Scalar> m_;
};

template <typename Scalar>
RealifiedKet<Scalar> realify_ket(const ComplexMatrixT<Scalar>& psi, bool normalized = false,
                                 Scalar tol = Scalar(kBlockTol)) {
  if (psi.cols() != 1 || psi.rows() == 0) throw DimensionMismatch("realify_ket expects a d x 1 column");
  const Eigen::Index d = psi.rows();
  Vector<Scalar> data(2 * d);
  data.head(d) = psi.col(0).real();
  data.tail(d) = psi.col(0).imag();
  if (normalized && std::abs(data.norm() - Scalar(1)) > tol) {
    throw InvalidArgument("realify_ket: input flagged normalized but norm is not 1");
  }
  return RealifiedKet<Scalar>(std::move(data), normalized);
}

template <typename Scalar>
ComplexMatrixT<Scalar> complexify(const RealifiedKet<Scalar>& psi) {
  ComplexMatrixT<Scalar> out(psi.dim(), 1);
  out.col(0).real() = psi.re();
  out.col(0).imag() = psi.im();
  return out;
}

template <typename Scalar>
RealifiedOperator<Scalar> realify_operator(const ComplexMatrixT<Scalar>& a) {
  if (a.size() == 0) throw DimensionMismatch("realify_operator: empty matrix");
  return RealifiedOperator<Scalar>::from_blocks(a.real(), a.imag());
}

template <typename Scalar>
RealifiedState<Scalar> realify_state(const ComplexMatrixT<Scalar>& rho,
                                     Scalar tol = Scalar(kBlockTol)) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw DimensionMismatch("realify_state: non-square input");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw InvalidArgument("realify_state: input is not Hermitian");
  }
  if (std::abs(rho.trace() - std::complex<Scalar>(1)) > tol) {
    throw InvalidArgument("realify_state: input trace is not 1");
  }
  const auto op = realify_operator(rho);
  return RealifiedState<Scalar>(Scalar(0.5) * op.matrix(), trusted);
}

template <typename Scalar>
ComplexMatrixT<Scalar> complexify(const RealifiedOperator<Scalar>& m) {
  ComplexMatrixT<Scalar> out(m.rows(), m.cols());
  out.real() = m.re();
  out.imag() = m.im();
  return out;
}

template <typename Scalar>
ComplexMatrixT<Scalar> complexify(const RealifiedState<Scalar>& s) {
  ComplexMatrixT<Scalar> out(s.dim(), s.dim());
  out.real() = s.re();
  out.imag() = s.im();
  return out;
}

/// Map_C on a raw real matrix; validates the block invariant first.
template <typename Scalar>
ComplexMatrixT<Scalar> complexify(const Matrix<Scalar>& m, Scalar tol = Scalar(kBlockTol)) {
  return complexify(RealifiedOperator<Scalar>::from_matrix(m, tol));
}

/// <phi|psi> computed from real data: phi^T psi - i phi^T (J (x) I) psi.
template <typename Scalar>
std::complex<Scalar> inner_product(const RealifiedKet<Scalar>& phi, const RealifiedKet<Scalar>& psi) {
  if (phi.dim() != psi.dim()) throw DimensionMismatch("inner_product: dimensions differ");
  const Scalar re = phi.data().dot(psi.data());
  // (J (x) I) [c; d] = [-d; c]
  const Scalar j_term = -phi.re().dot(psi.im()) + phi.im().dot(psi.re());
  return {re, -j_term};
}

/// Realified projector |psi><psi| built from real data only.
template <typename Scalar>
RealifiedState<Scalar> realified_density_from_ket(const RealifiedKet<Scalar>& psi,
                                                  Scalar tol = Scalar(kBlockTol)) {
  if (std::abs(psi.norm() - Scalar(1)) > tol) {
    throw InvalidArgument("realified_density_from_ket: ket is not normalized");
  }
  const Vector<Scalar> a = psi.re();
  const Vector<Scalar> b = psi.im();
  // psi psi^dagger = (a a^T + b b^T) + i (b a^T - a b^T)
  const Matrix<Scalar> re = a * a.transpose() + b * b.transpose();
  const Matrix<Scalar> im = b * a.transpose() - a * b.transpose();
  const auto op = RealifiedOperator<Scalar>::from_blocks(re, im);
  return RealifiedState<Scalar>(Scalar(0.5) * op.matrix(), trusted);
}

}  // namespace realq
