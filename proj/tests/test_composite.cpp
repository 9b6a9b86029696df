#include <cmath>

#include "gtest/gtest.h"
#include "realq/composite.hpp"
#include "realq/oracle.hpp"

using namespace realq;
using oracle::SampleKind;

namespace {

const Complex I(0.0, 1.0);

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix scalar(Complex z) { return ComplexMatrix::Constant(1, 1, z); }

RawPairKet<double> unit_pair(int pair, int d1, int d2, int i, int j) {
  RealVector v = RealVector::Zero(4 * d1 * d2);
  v(pair * d1 * d2 + i * d2 + j) = 1.0;
  return RawPairKet<double>(v, d1, d2);
}

}  // namespace

TEST(naive_tensor, fixed_values) {
  const auto j = realify_operator(scalar(I));
  EXPECT_EQ(naive_tensor(j, j), kron(xz(), xz()));

  const ComplexMatrix two = oracle::sample(SampleKind::generic, 2, 1);
  const RealMatrix n = naive_tensor(j, realify_operator(two));
  EXPECT_EQ(n.rows(), 8);
  EXPECT_EQ(realify_operator(oracle::tensor(scalar(I), two)).matrix().rows(), 4);
}

TEST(naive_tensor, real_inputs_give_four_copies) {
  const ComplexMatrix r1 = oracle::sample_real(2, 1);
  const ComplexMatrix r2 = oracle::sample_real(3, 2);
  const RealMatrix n = naive_tensor(realify_operator(r1), realify_operator(r2));
  const RealMatrix r2_real = r2.real();
  // Block (a, b) of the 2x2 outer grid is [[R1_ab R2, 0], [0, R1_ab R2]].
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const RealMatrix block = n.block(a * 6, b * 6, 6, 6);
      const RealMatrix expected = r1(a, b).real() * r2_real;
      EXPECT_EQ(block.topLeftCorner(3, 3), expected);
      EXPECT_EQ(block.bottomRightCorner(3, 3), expected);
      EXPECT_TRUE(block.topRightCorner(3, 3).isZero(0.0));
    }
  }
  // The (flag1 = 0) x (flag1 = 1) blocks vanish.
  EXPECT_TRUE(n.block(0, 12, 12, 12).isZero(0.0));
}

TEST(naive_tensor, dimension_law) {
  for (int d1 = 1; d1 <= 6; ++d1) {
    for (int d2 = 1; d2 <= 6; ++d2) {
      const auto m = realify_operator(oracle::sample(SampleKind::generic, d1, 1));
      const auto n = realify_operator(oracle::sample(SampleKind::generic, d2, 2));
      EXPECT_EQ(naive_tensor(m, n).rows(), 4 * d1 * d2);
      EXPECT_EQ(modified_tensor_operator(m, n).matrix().rows(), 2 * d1 * d2);
    }
  }
}

TEST(parity_contract, contraction_table) {
  EXPECT_EQ(ParityContractor<double>::matrix(), (RealMatrix(2, 4) << 1, 0, 0, -1, 0, 1, 1, 0).finished());
  const int d1 = 2, d2 = 3, i = 1, j = 2;
  const int at = i * d2 + j;
  const int n = d1 * d2;
  // 00 -> +a, 01 -> +b, 10 -> +b, 11 -> -a
  EXPECT_EQ(parity_contract(unit_pair(0, d1, d2, i, j)).data(), RealVector::Unit(2 * n, at));
  EXPECT_EQ(parity_contract(unit_pair(1, d1, d2, i, j)).data(), RealVector::Unit(2 * n, n + at));
  EXPECT_EQ(parity_contract(unit_pair(2, d1, d2, i, j)).data(), RealVector::Unit(2 * n, n + at));
  EXPECT_EQ(parity_contract(unit_pair(3, d1, d2, i, j)).data(), RealVector(-RealVector::Unit(2 * n, at)));
}

TEST(parity_contract, sign_forced_by_imaginary_pair) {
  // (i|0>) (x) (i|0>) = -|00>: the 11 flag pair must contract to -|0>.
  const ComplexMatrix i0 = I * oracle::ket(2, 0);
  const auto raw = RawPairKet<double>::from_product(realify_ket(i0), realify_ket(i0));
  const auto expected = realify_ket(oracle::tensor(i0, i0));
  EXPECT_EQ(expected.data()(0), -1.0);
  EXPECT_EQ(parity_contract(raw).data(), expected.data());

  // An unsigned parity map would give +1 there.
  RealMatrix unsigned_map(2, 4);
  unsigned_map << 1, 0, 0, 1, 0, 1, 1, 0;
  const Eigen::Map<const RealMatrix> by_pair(raw.data().data(), 4, 4);
  EXPECT_EQ((by_pair * unsigned_map.transpose())(0, 0), 1.0);
}

TEST(parity_contract, identity_on_random_pairs) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const int d1 = 1 + static_cast<int>(s % 6);
    const int d2 = 1 + static_cast<int>((s / 6) % 6);
    const ComplexMatrix psi = oracle::sample(SampleKind::pure, d1, s);
    const ComplexMatrix phi = oracle::sample(SampleKind::pure, d2, s + 999);
    const auto raw = RawPairKet<double>::from_kron(kron(realify_ket(psi).data(), realify_ket(phi).data()), d1, d2);
    ASSERT_LE((parity_contract(raw).data() - realify_ket(oracle::tensor(psi, phi)).data()).cwiseAbs().maxCoeff(),
              1e-13);
  }
}

TEST(raw_pair_ket, validation) {
  EXPECT_THROW(RawPairKet<double>(RealVector::Zero(7), 1, 2), DimensionMismatch);
  EXPECT_THROW(RawPairKet<double>::from_kron(RealVector::Zero(6), 1, 2), DimensionMismatch);
}

TEST(modified_tensor_operator, fixed_values) {
  const auto j = realify_operator(scalar(I));
  EXPECT_EQ(modified_tensor_operator(j, j).matrix(), RealMatrix(-RealMatrix::Identity(2, 2)));

  const auto m = realify_operator(oracle::sample(SampleKind::generic, 3, 4));
  EXPECT_EQ(modified_tensor_operator(m, realify_operator(scalar(1.0))).matrix(), m.matrix());

  const RealMatrix bad = (RealMatrix(2, 2) << 1, 0, 0, 2).finished();
  EXPECT_THROW(modified_tensor_operator(RealifiedOperator<double>(bad, trusted), j), BlockStructureViolation);
}

TEST(modified_tensor_operator, equals_realified_tensor) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const ComplexMatrix v1 = oracle::sample(SampleKind::generic, 3, s);
    const ComplexMatrix v2 = oracle::sample(SampleKind::generic, 2, s + 1);
    const ComplexMatrix v12 = oracle::tensor(v1, v2);
    const auto m = modified_tensor_operator(realify_operator(v1), realify_operator(v2));
    ASSERT_LE(max_abs(m.matrix() - realify_operator(v12).matrix()), 1e-13);
    ASSERT_LE(oracle::max_abs(complexify(m) - v12), 1e-13);
  }
}

TEST(modified_tensor_operator, equals_identity_plus_xz_decomposition) {
  const ComplexMatrix v1 = oracle::sample(SampleKind::generic, 2, 10);
  const ComplexMatrix v2 = oracle::sample(SampleKind::generic, 2, 11);
  const ComplexMatrix v12 = oracle::tensor(v1, v2);
  const RealMatrix expected =
      kron(RealMatrix(RealMatrix::Identity(2, 2)), RealMatrix(v12.real())) + kron(xz(), RealMatrix(v12.imag()));
  EXPECT_LE(max_abs(modified_tensor_operator(realify_operator(v1), realify_operator(v2)).matrix() - expected), 1e-14);
}

TEST(modified_tensor_operator, associativity_and_multiplicativity) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ComplexMatrix a = oracle::sample(SampleKind::generic, 2, s);
    const ComplexMatrix b = oracle::sample(SampleKind::generic, 3, s + 1);
    const ComplexMatrix c = oracle::sample(SampleKind::generic, 2, s + 2);
    const ComplexMatrix abc = oracle::tensor(oracle::tensor(a, b), c);
    const auto ra = realify_operator(a), rb = realify_operator(b), rc = realify_operator(c);
    const auto left = modified_tensor_operator(modified_tensor_operator(ra, rb), rc);
    const auto right = modified_tensor_operator(ra, modified_tensor_operator(rb, rc));
    ASSERT_LE(max_abs(left.matrix() - realify_operator(abc).matrix()), 1e-12);
    ASSERT_LE(max_abs(right.matrix() - left.matrix()), 1e-12);

    const auto rd = realify_operator(oracle::sample(SampleKind::generic, 3, s + 3));
    const auto lhs = real_mul(modified_tensor_operator(ra, rb), modified_tensor_operator(rc, rd));
    const auto rhs = modified_tensor_operator(real_mul(ra, rc), real_mul(rb, rd));
    ASSERT_LE(max_abs(lhs.matrix() - rhs.matrix()), 1e-12);
  }
}

TEST(modified_tensor_state, fixed_values) {
  const auto zero = realify_state(oracle::projector(oracle::ket(2, 0)));
  const auto zz = realify_state(oracle::projector(oracle::ket(4, 0)));
  EXPECT_EQ(modified_tensor_state(zero, zero).matrix(), zz.matrix());
}

TEST(modified_tensor_state, equals_realified_tensor_and_keeps_trace) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ComplexMatrix r1 = oracle::sample(SampleKind::density, 2, s);
    const ComplexMatrix r2 = oracle::sample(SampleKind::density, 3, s + 1);
    const auto out = modified_tensor_state(realify_state(r1), realify_state(r2));
    ASSERT_NEAR(out.trace(), 1.0, 1e-12);
    ASSERT_LE(max_abs(out.matrix() - realify_state(oracle::tensor(r1, r2), 1e-9).matrix()), 1e-12);
  }
}

TEST(modified_tensor_state, rejects_trace_deviation) {
  const RealifiedState<double> heavy(RealMatrix::Identity(4, 4), trusted);
  const auto zero = realify_state(oracle::projector(oracle::ket(2, 0)));
  EXPECT_THROW(modified_tensor_state(heavy, zero), InvalidArgument);
}

TEST(ancilla_witness, fixed_values) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix z_i = oracle::tensor(oracle::pauli_z(), id);
  const ComplexMatrix s_i = oracle::tensor(oracle::phase_gate(), id);
  EXPECT_FALSE(ancilla_witness(realify_operator(z_i)).uses_shared_ancilla);
  const auto w = ancilla_witness(realify_operator(s_i));
  EXPECT_TRUE(w.uses_shared_ancilla);
  EXPECT_DOUBLE_EQ(w.xz_component_norm, 1.0);
  EXPECT_FALSE(ancilla_witness(realify_operator(oracle::hadamard())).uses_shared_ancilla);
}

TEST(ancilla_witness, iff_imaginary_part) {
  int misclassified = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const int d = 1 + static_cast<int>(s % 8);
    for (const ComplexMatrix& a : {oracle::sample(SampleKind::generic, d, s), oracle::sample_real(d, s)}) {
      const bool expected = a.imag().cwiseAbs().maxCoeff() > 1e-10;
      if (ancilla_witness(realify_operator(a)).uses_shared_ancilla != expected) ++misclassified;
    }
  }
  EXPECT_EQ(misclassified, 0);

  // Just below and above the threshold.
  const ComplexMatrix tiny = ComplexMatrix::Constant(1, 1, Complex(1.0, 5e-11));
  const ComplexMatrix small = ComplexMatrix::Constant(1, 1, Complex(1.0, 5e-10));
  EXPECT_FALSE(ancilla_witness(realify_operator(tiny)).uses_shared_ancilla);
  EXPECT_TRUE(ancilla_witness(realify_operator(small)).uses_shared_ancilla);
}

TEST(counterexample_report, incompatible_and_repaired) {
  for (int d1 = 1; d1 <= 4; ++d1) {
    for (int d2 = 1; d2 <= 4; ++d2) {
      const auto r = counterexample_report(d1, d2, 17);
      EXPECT_TRUE(r.verdicts.at("incompatible"));
      EXPECT_EQ(r.metrics.at("naive_dim"), 4.0 * d1 * d2);
      EXPECT_EQ(r.metrics.at("realified_tensor_dim"), 2.0 * d1 * d2);
      EXPECT_TRUE(r.passed());
    }
  }
  EXPECT_EQ(to_json(counterexample_report(2, 2, 5)), to_json(counterexample_report(2, 2, 5)));
  EXPECT_THROW(counterexample_report(0, 2, 1), InvalidArgument);
}
