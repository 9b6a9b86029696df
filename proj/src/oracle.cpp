#include "realq/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "realq/kron.hpp"

namespace realq::oracle {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng,
                       double stddev) {
  std::normal_distribution<double> normal(0.0, stddev);
  ComplexMatrix g(rows, cols);
  // Fill row-major so the stream order matches the file format.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

bool is_density_matrix(const ComplexMatrix& m, double tol) {
  if (!m.allFinite() || !is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, double tol)
    : kraus_ops_(std::move(kraus_ops)) {
  if (kraus_ops_.empty()) throw InvalidArgument("channel needs at least one Kraus operator");
  const Eigen::Index d = kraus_ops_.front().rows();
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus_ops_) {
    if (k.rows() != d || k.cols() != d) throw DimensionMismatch("Kraus operators must all be d x d");
    require_finite(k, "Kraus operator");
    completeness += k.adjoint() * k;
  }
  if (max_abs(completeness - ComplexMatrix::Identity(d, d)) > tol) {
    throw InvalidArgument("Kraus operators are not trace preserving");
  }
}

KrausChannel KrausChannel::identity(Eigen::Index d) {
  return KrausChannel({ComplexMatrix::Identity(d, d)});
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& observable, double tol) {
  if (rho.rows() != rho.cols() || observable.rows() != observable.cols() ||
      rho.rows() != observable.rows()) {
    throw DimensionMismatch("expectation: state and observable dimensions differ");
  }
  const Complex value = (rho * observable).trace();
  if (std::abs(value.imag()) > tol) {
    throw InvalidArgument("expectation: imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}

ComplexMatrix apply_channel(const KrausChannel& channel, const ComplexMatrix& rho) {
  if (rho.rows() != channel.dim() || rho.cols() != channel.dim()) {
    throw DimensionMismatch("apply_channel: state dimension differs from channel");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : channel.kraus_ops()) out += k * rho * k.adjoint();
  return out;
}

SampleKind parse_sample_kind(std::string_view name) {
  if (name == "unitary") return SampleKind::unitary;
  if (name == "density") return SampleKind::density;
  if (name == "pure") return SampleKind::pure;
  if (name == "generic") return SampleKind::generic;
  throw InvalidArgument("unknown sample kind '" + std::string(name) + "'");
}

ComplexMatrix sample(SampleKind kind, Eigen::Index d, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("sample: dimension must be positive");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case SampleKind::generic:
      return gaussian(d, d, rng, std::sqrt(0.5));
    case SampleKind::pure: {
      ComplexMatrix v = gaussian(d, 1, rng, 1.0);
      return v / v.norm();
    }
    case SampleKind::density: {
      const ComplexMatrix g = gaussian(d, d, rng, 1.0);
      const ComplexMatrix w = g * g.adjoint();
      ComplexMatrix rho = w / w.trace().real();
      // Remove rounding asymmetry so the result is exactly Hermitian.
      return 0.5 * (rho + rho.adjoint()).eval();
    }
    case SampleKind::unitary: {
      const ComplexMatrix g = gaussian(d, d, rng, std::sqrt(0.5));
      Eigen::HouseholderQR<ComplexMatrix> qr(g);
      const ComplexMatrix q = qr.householderQ();
      const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
      ComplexMatrix u = q;
      for (Eigen::Index j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        u.col(j) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
      }
      return u;
    }
  }
  throw InvalidArgument("sample: unhandled kind");
}

ComplexMatrix sample_hermitian(Eigen::Index d, std::uint64_t seed) {
  const ComplexMatrix g = sample(SampleKind::generic, d, seed);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix sample_real(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(normal(rng), 0.0);
  }
  return m;
}

KrausChannel sample_channel(Eigen::Index d, int num_kraus, std::uint64_t seed) {
  if (num_kraus < 1) throw InvalidArgument("sample_channel: need at least one Kraus operator");
  std::vector<ComplexMatrix> gs;
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < num_kraus; ++j) {
    gs.push_back(sample(SampleKind::generic, d, derive_seed(seed, static_cast<std::uint64_t>(j))));
    s += gs.back().adjoint() * gs.back();
  }
  // K_j = G_j S^{-1/2} gives sum_j K_j^dagger K_j = I.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s);
  const Eigen::VectorXd inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const ComplexMatrix s_inv_sqrt = solver.eigenvectors() *
                                   inv_sqrt.cast<Complex>().asDiagonal() *
                                   solver.eigenvectors().adjoint();
  for (auto& g : gs) g = g * s_inv_sqrt;
  return KrausChannel(std::move(gs), 1e-9);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix hadamard() { return (pauli_x() + pauli_z()) / std::sqrt(2.0); }

ComplexMatrix phase_gate() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

ComplexMatrix ket(Eigen::Index d, Eigen::Index index) {
  ComplexMatrix v = ComplexMatrix::Zero(d, 1);
  v(index, 0) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexMatrix& psi) { return psi * psi.adjoint(); }

}  // namespace realq::oracle
