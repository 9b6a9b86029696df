#include <cmath>

#include "brute_force.hpp"
#include "gtest/gtest.h"
#include "realq/oracle.hpp"
#include "realq/real_algebra.hpp"
#include "realq/realify.hpp"

using namespace realq;
using oracle::SampleKind;

namespace {

const Complex I(0.0, 1.0);
const double kH = 1.0 / std::sqrt(2.0);

ComplexMatrix column(std::initializer_list<Complex> values) {
  ComplexMatrix v(static_cast<Eigen::Index>(values.size()), 1);
  Eigen::Index i = 0;
  for (auto z : values) v(i++, 0) = z;
  return v;
}

RealMatrix rows(std::initializer_list<std::initializer_list<double>> values) {
  RealMatrix m(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : values) {
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST(realify_ket, layout) {
  EXPECT_EQ(realify_ket(column({1, 0})).data(), RealVector::Unit(4, 0));

  RealVector expected(4);
  expected << kH, 0, 0, kH;
  EXPECT_LE((realify_ket(column({kH, I * kH})).data() - expected).cwiseAbs().maxCoeff(), 1e-15);

  expected << kH, kH, 0, 0;
  EXPECT_LE((realify_ket(column({kH, kH})).data() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(realify_ket, errors) {
  EXPECT_THROW(realify_ket(ComplexMatrix(ComplexMatrix::Identity(2, 2))), DimensionMismatch);
  EXPECT_THROW(realify_ket(column({1, 1}), true), InvalidArgument);
  EXPECT_NO_THROW(realify_ket(column({1, 1}), false));
}

TEST(realify_ket, preserves_norm) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const ComplexMatrix psi = oracle::sample(SampleKind::generic, 1 + s % 8, s).col(0);
    EXPECT_NEAR(realify_ket(psi).norm(), psi.norm(), 1e-12);
  }
}

TEST(realify_operator, imaginary_unit_is_xz) {
  const ComplexMatrix i = ComplexMatrix::Constant(1, 1, I);
  EXPECT_EQ(realify_operator(i).matrix(), xz());
  EXPECT_EQ(xz(), rows({{0, -1}, {1, 0}}));
}

TEST(realify_operator, pauli_y) {
  const RealMatrix expected = rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  EXPECT_EQ(realify_operator(oracle::pauli_y()).matrix(), expected);
}

TEST(realify_operator, real_matrix_is_block_diagonal) {
  const ComplexMatrix r = oracle::sample_real(3, 4);
  const RealMatrix m = realify_operator(r).matrix();
  EXPECT_EQ(m.topLeftCorner(3, 3), r.real());
  EXPECT_EQ(m.bottomRightCorner(3, 3), r.real());
  EXPECT_TRUE(m.topRightCorner(3, 3).isZero(0.0));
  EXPECT_TRUE(m.bottomLeftCorner(3, 3).isZero(0.0));
}

TEST(realify_operator, matches_entrywise_reference_on_rectangular_input) {
  ComplexMatrix a(2, 3);
  for (int i = 0; i < a.size(); ++i) a(i) = Complex(i - 2, 3 - 2 * i);
  const auto expected = brute::realify(brute::from_eigen(a));
  const RealMatrix got = realify_operator(a).matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(got(i, j), expected[i][j]);
}

TEST(realify_operator, dagger_is_transpose) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const ComplexMatrix a = oracle::sample(SampleKind::generic, 1 + s % 8, s);
    const ComplexMatrix a_dagger = a.adjoint();
    EXPECT_LE((realify_operator(a_dagger).matrix() - realify_operator(a).matrix().transpose()).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(realify_operator, orthogonal_iff_unitary) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int d = 1 + static_cast<int>(s % 6);
    const ComplexMatrix u = oracle::sample(SampleKind::unitary, d, s);
    EXPECT_LE(orthogonality_defect(realify_operator(u).matrix()), 1e-12);
    const ComplexMatrix bent = u + 1e-4 * oracle::sample(SampleKind::generic, d, s + 1);
    EXPECT_FALSE(oracle::is_unitary(bent, 1e-10));
    EXPECT_GT(orthogonality_defect(realify_operator(bent).matrix()), 1e-10);
  }
}

TEST(realify_operator, j_squared_is_minus_identity) {
  const auto j = realify_operator(ComplexMatrix(ComplexMatrix::Constant(1, 1, I)));
  EXPECT_EQ(real_mul(j, j).matrix(), RealMatrix(-RealMatrix::Identity(2, 2)));
}

TEST(realify_state, fixed_values) {
  RealMatrix expected = RealMatrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(2, 2) = 0.5;
  EXPECT_EQ(realify_state(oracle::projector(oracle::ket(2, 0))).matrix(), expected);

  const ComplexMatrix mixed = ComplexMatrix::Identity(2, 2) / 2.0;
  EXPECT_EQ(realify_state(mixed).matrix(), RealMatrix(RealMatrix::Identity(4, 4) / 4.0));

  // |+i><+i|: Re = I/2, Im = [[0, -1/2], [1/2, 0]].
  const ComplexMatrix plus_i = oracle::projector(column({kH, I * kH}));
  const RealMatrix re = RealMatrix::Identity(2, 2) / 2.0;
  const RealMatrix im = rows({{0, -0.5}, {0.5, 0}});
  RealMatrix built(4, 4);
  built << re, -im, im, re;
  EXPECT_LE((realify_state(plus_i).matrix() - 0.5 * built).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(realify_state, trace_and_hermiticity_image) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    const ComplexMatrix rho = oracle::sample(SampleKind::density, 1 + s % 8, s);
    const auto st = realify_state(rho);
    EXPECT_NEAR(st.trace(), 1.0, 1e-12);
    EXPECT_LE((st.re() - st.re().transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((st.im() + st.im().transpose()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(realify_state, errors) {
  EXPECT_THROW(realify_state(ComplexMatrix(ComplexMatrix::Identity(2, 3))), DimensionMismatch);
  EXPECT_THROW(realify_state(ComplexMatrix(ComplexMatrix::Identity(2, 2))), InvalidArgument);
  EXPECT_THROW(realify_state(ComplexMatrix(oracle::sample(SampleKind::generic, 2, 1))), InvalidArgument);
}

TEST(complexify, inverse_of_xz) {
  const ComplexMatrix z = complexify(xz());
  ASSERT_EQ(z.size(), 1);
  EXPECT_EQ(z(0, 0), I);
}

TEST(complexify, reports_max_asymmetry) {
  const RealMatrix bad = rows({{1, 0}, {0, 2}});
  try {
    complexify(bad);
    FAIL() << "expected BlockStructureViolation";
  } catch (const BlockStructureViolation& e) {
    EXPECT_DOUBLE_EQ(e.max_asymmetry, 1.0);
  }
  EXPECT_THROW(complexify(RealMatrix(RealMatrix::Identity(3, 3))), DimensionMismatch);
}

TEST(complexify, tolerance_is_configurable) {
  RealMatrix near = xz();
  near(0, 0) = 1e-11;
  EXPECT_NO_THROW(complexify(near));
  EXPECT_THROW(complexify(near, 1e-12), BlockStructureViolation);
}

TEST(complexify, round_trip) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const ComplexMatrix a = oracle::sample(SampleKind::generic, 1 + s % 8, s);
    ASSERT_LE(oracle::max_abs(complexify(realify_operator(a)) - a), 1e-14);
  }
  const ComplexMatrix rho = oracle::sample(SampleKind::density, 4, 3);
  EXPECT_LE(oracle::max_abs(complexify(realify_state(rho)) - rho), 1e-15);
  const ComplexMatrix psi = oracle::sample(SampleKind::pure, 4, 3);
  EXPECT_EQ(complexify(realify_ket(psi)), psi);
}

TEST(inner_product, fixed_values) {
  const auto zero = realify_ket(oracle::ket(2, 0));
  EXPECT_EQ(inner_product(zero, zero), Complex(1.0, 0.0));
  const ComplexMatrix i_zero = I * oracle::ket(2, 0);
  EXPECT_EQ(inner_product(zero, realify_ket(i_zero)), Complex(0.0, 1.0));
  EXPECT_EQ(inner_product(realify_ket(i_zero), zero), Complex(0.0, -1.0));
  EXPECT_THROW(inner_product(zero, realify_ket(oracle::ket(3, 0))), DimensionMismatch);
}

TEST(inner_product, matches_oracle) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ComplexMatrix phi = oracle::sample(SampleKind::pure, 4, s);
    const ComplexMatrix psi = oracle::sample(SampleKind::pure, 4, s + 5000);
    const Complex expected = (phi.adjoint() * psi)(0, 0);
    EXPECT_LE(std::abs(inner_product(realify_ket(phi), realify_ket(psi)) - expected), 1e-12);
  }
}

TEST(inner_product, literal_tilde_bra_is_not_the_norm) {
  // Contracting [a; -b] with [a; b] yields sum a^2 - b^2, not 1.
  const auto psi = realify_ket(column({kH, I * kH}));
  RealVector tilde_bra(4);
  tilde_bra << psi.re(), -psi.im();
  EXPECT_NEAR(tilde_bra.dot(psi.data()), 0.0, 1e-15);
  EXPECT_NEAR(inner_product(psi, psi).real(), 1.0, 1e-15);
}

TEST(realified_density_from_ket, matches_state_realification) {
  RealMatrix expected = RealMatrix::Zero(4, 4);
  expected(0, 0) = expected(2, 2) = 0.5;
  EXPECT_EQ(realified_density_from_ket(realify_ket(oracle::ket(2, 0))).matrix(), expected);

  const ComplexMatrix plus_i = column({kH, I * kH});
  EXPECT_LE((realified_density_from_ket(realify_ket(plus_i)).matrix() -
             realify_state(oracle::projector(plus_i)).matrix()).cwiseAbs().maxCoeff(), 1e-15);

  for (std::uint64_t s = 0; s < 100; ++s) {
    const ComplexMatrix psi = oracle::sample(SampleKind::pure, 3, s);
    EXPECT_LE((realified_density_from_ket(realify_ket(psi)).matrix() -
               realify_state(oracle::projector(psi)).matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(realified_density_from_ket(realify_ket(column({1, 1}))), InvalidArgument);
}

TEST(realified_types, validation) {
  EXPECT_THROW(RealifiedKet<double>(RealVector::Zero(3)), DimensionMismatch);
  EXPECT_THROW(RealifiedOperator<double>::from_matrix(rows({{1, 0}, {0, 2}})), BlockStructureViolation);
  EXPECT_THROW(RealifiedState<double>::from_matrix(RealMatrix::Identity(4, 4)), InvalidArgument);
  EXPECT_NO_THROW(RealifiedState<double>::from_matrix(RealMatrix::Identity(4, 4) / 4.0));
}

TEST(realify_scalar_types, long_double) {
  Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic> a(1, 1);
  a(0, 0) = {0.0L, 1.0L};
  const auto m = realify_operator(a);
  EXPECT_EQ(m.matrix(), xz<long double>());
  EXPECT_EQ(complexify(m), a);
}
