#pragma once

// Composite systems in the realified picture.
//
// The plain Kronecker product of two realified objects carries one
// real/imaginary flag per party, so it lives in a space twice as large as the
// realification of the complex tensor product. The parity contraction folds
// the two flags into a single shared one using the multiplication table of
// {1, i}:
//
//     00 -> +|0>    01 -> +|1>    10 -> +|1>    11 -> -|0>
//
// and the modified tensor product is the operator-level version of the same
// rule. The single shared flag is what every party's operations act on.

#include <cstdint>

#include "realq/kron.hpp"
#include "realq/real_algebra.hpp"
#include "realq/realify.hpp"
#include "realq/report.hpp"

namespace realq {

/// Two-flag ket: data index = pair * (d1 d2) + i * d2 + j, where
/// pair = 2 * flag1 + flag2 enumerates 00, 01, 10, 11.
template <typename Scalar = double>
class RawPairKet {
 public:
  RawPairKet(Vector<Scalar> data, Eigen::Index d1, Eigen::Index d2)
      : data_(std::move(data)), d1_(d1), d2_(d2) {
    if (d1 < 1 || d2 < 1 || data_.size() != 4 * d1 * d2) {
      throw DimensionMismatch("raw pair ket length must be 4 d1 d2");
    }
    if (!data_.allFinite()) throw InvalidArgument("raw pair ket has non-finite entries");
  }

  /// Reorders a plain Kronecker product, indexed (flag1, i, flag2, j), into
  /// the (flag1 flag2, i, j) layout.
  static RawPairKet from_kron(const Vector<Scalar>& product, Eigen::Index d1, Eigen::Index d2) {
    if (product.size() != 4 * d1 * d2) throw DimensionMismatch("kron length must be 4 d1 d2");
    Vector<Scalar> data(product.size());
    for (Eigen::Index f1 = 0; f1 < 2; ++f1) {
      for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index f2 = 0; f2 < 2; ++f2) {
          for (Eigen::Index j = 0; j < d2; ++j) {
            const Eigen::Index src = ((f1 * d1 + i) * 2 + f2) * d2 + j;
            const Eigen::Index dst = (2 * f1 + f2) * d1 * d2 + i * d2 + j;
            data(dst) = product(src);
          }
        }
      }
    }
    return RawPairKet(std::move(data), d1, d2);
  }

  static RawPairKet from_product(const RealifiedKet<Scalar>& psi, const RealifiedKet<Scalar>& phi) {
    return from_kron(kron(psi.data(), phi.data()), psi.dim(), phi.dim());
  }

  Eigen::Index d1() const { return d1_; }
  Eigen::Index d2() const { return d2_; }
  const Vector<Scalar>& data() const { return data_; }

 private:
  Vector<Scalar> data_;
  Eigen::Index d1_;
  Eigen::Index d2_;
};

/// The 2x4 contraction from the flag pair onto a single flag.
template <typename Scalar = double>
struct ParityContractor {
  static Matrix<Scalar> matrix() {
    Matrix<Scalar> c(2, 4);
    c << 1, 0, 0, -1,
         0, 1, 1, 0;
    return c;
  }
};

template <typename Scalar>
RealifiedKet<Scalar> parity_contract(const RawPairKet<Scalar>& v) {
  const Eigen::Index n = v.d1() * v.d2();
  // Column p of this view holds the system amplitudes on flag pair p.
  const Eigen::Map<const Matrix<Scalar>> by_pair(v.data().data(), n, 4);
  const Matrix<Scalar> contracted = by_pair * ParityContractor<Scalar>::matrix().transpose();
  return RealifiedKet<Scalar>(Eigen::Map<const Vector<Scalar>>(contracted.data(), 2 * n));
}

/// Plain Kronecker product of two realified matrices; no block structure.
template <typename Scalar>
Matrix<Scalar> naive_tensor(const RealifiedOperator<Scalar>& m, const RealifiedOperator<Scalar>& n) {
  return kron(m.matrix(), n.matrix());
}

/// Map_R(V1 (x) V2) computed from the realified factors alone.
template <typename Scalar>
RealifiedOperator<Scalar> modified_tensor_operator(const RealifiedOperator<Scalar>& m,
                                                   const RealifiedOperator<Scalar>& n,
                                                   Scalar tol = Scalar(kBlockTol)) {
  for (const auto* op : {&m, &n}) {
    const Scalar asym = block_asymmetry(op->matrix());
    if (asym > tol) throw BlockStructureViolation(static_cast<double>(asym));
  }
  const Matrix<Scalar> r1 = m.re(), s1 = m.im(), r2 = n.re(), s2 = n.im();
  return RealifiedOperator<Scalar>::from_blocks(kron(r1, r2) - kron(s1, s2),
                                                kron(s1, r2) + kron(r1, s2));
}

/// Map_R(rho1 (x) rho2); the 1/2 factor is removed from the inputs, the
/// operator rule applied, and the factor restored once.
template <typename Scalar>
RealifiedState<Scalar> modified_tensor_state(const RealifiedState<Scalar>& r1, const RealifiedState<Scalar>& r2,
                                             Scalar tol = Scalar(kBlockTol)) {
  if (std::abs(r1.trace() - Scalar(1)) > tol || std::abs(r2.trace() - Scalar(1)) > tol) {
    throw InvalidArgument("modified_tensor_state: input trace deviates from 1");
  }
  const auto combined = modified_tensor_operator(r1.as_operator(), r2.as_operator(), tol);
  Matrix<Scalar> m = Scalar(0.5) * combined.matrix();
  if (std::abs(m.trace() - Scalar(1)) > tol) {
    throw InvalidArgument("modified_tensor_state: output trace deviates from 1");
  }
  return RealifiedState<Scalar>(std::move(m), trusted);
}

struct AncillaWitness {
  bool uses_shared_ancilla = false;
  double xz_component_norm = 0.0;
};

/// Splits M = I (x) R + J (x) S over the leftmost flag and reports whether
/// the J part (the shared flag) is engaged.
template <typename Scalar>
AncillaWitness ancilla_witness(const RealifiedOperator<Scalar>& m, Scalar tol = Scalar(kWitnessTol)) {
  const Scalar norm = m.im().size() == 0 ? Scalar(0) : m.im().cwiseAbs().maxCoeff();
  return {norm > tol, static_cast<double>(norm)};
}

/// Shows that plain tensoring of realified operators cannot reproduce the
/// realified complex tensor product, and that the parity contraction
/// repairs it on kets.
ExperimentReport counterexample_report(int d1, int d2, std::uint64_t seed);

}  // namespace realq
