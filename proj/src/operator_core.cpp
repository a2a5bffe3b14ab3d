#include "fdt/operator_core.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fdt {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

namespace detail {
void require_same_dim(Eigen::Index a, Eigen::Index b, const char* where) {
  if (a != b) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}
}  // namespace detail

HermitianOperator::HermitianOperator(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("HermitianOperator: matrix must be square with dim >= 1");
  }
  const double scale = std::max(max_abs(entries_), 1.0);
  const double dev = max_abs(entries_ - entries_.adjoint());
  if (dev > kHermitianTol * scale) {
    throw InvariantViolation("HermitianOperator: not Hermitian, |M - M^dag|_max = " +
                             std::to_string(dev) + " (scale " + std::to_string(scale) + ")");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::scaled(double factor) const {
  return HermitianOperator(factor * entries_);
}

HermitianOperator HermitianOperator::plus(const HermitianOperator& other) const {
  detail::require_same_dim(dim(), other.dim(), "HermitianOperator::plus");
  return HermitianOperator(entries_ + other.entries_);
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.matrix().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvariantViolation("DensityMatrix: trace = " + std::to_string(tr) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op_.matrix(), Eigen::EigenvaluesOnly);
  const double mineig = es.eigenvalues().minCoeff();
  if (mineig < kPositivityFloor) {
    throw InvariantViolation("DensityMatrix: negative eigenvalue " + std::to_string(mineig));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(HermitianOperator(
      ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  ComplexMatrix proj = psi * psi.adjoint() / n2;
  return DensityMatrix(HermitianOperator(std::move(proj)));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(op_.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition eig_hermitian(const HermitianOperator& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  return SpectralDecomposition{es.eigenvalues(), es.eigenvectors()};
}

std::pair<DensityMatrix, double> thermal_state(const HermitianOperator& h0, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("thermal_state: beta must be positive");
  const SpectralDecomposition sd = eig_hermitian(h0);
  const double emin = sd.eigenvalues.minCoeff();
  RealVector weights = (-beta * (sd.eigenvalues.array() - emin)).exp();
  const double z_shifted = weights.sum();
  weights /= z_shifted;
  ComplexMatrix rho = sd.eigenvectors * weights.asDiagonal() * sd.eigenvectors.adjoint();
  const double log_z = std::log(z_shifted) - beta * emin;
  return {DensityMatrix(HermitianOperator(std::move(rho))), log_z};
}

double expectation(const DensityMatrix& rho, const HermitianOperator& b) {
  detail::require_same_dim(rho.dim(), b.dim(), "expectation");
  const Complex val = (b.matrix() * rho.matrix()).trace();
  const double scale = std::max(1.0, std::abs(val));
  if (std::abs(val.imag()) > 1e-12 * scale) {
    throw InvariantViolation("expectation: imaginary residue " + std::to_string(val.imag()));
  }
  return val.real();
}

double symmetrized_correlation(const DensityMatrix& rho, const HermitianOperator& x,
                               const HermitianOperator& y) {
  detail::require_same_dim(rho.dim(), x.dim(), "symmetrized_correlation");
  detail::require_same_dim(x.dim(), y.dim(), "symmetrized_correlation");
  const ComplexMatrix xy = x.matrix() * y.matrix();
  const Complex sym = 0.5 * (xy * rho.matrix()).trace() +
                      0.5 * (xy.adjoint() * rho.matrix()).trace();
  const double mx = (x.matrix() * rho.matrix()).trace().real();
  const double my = (y.matrix() * rho.matrix()).trace().real();
  return sym.real() - mx * my;
}

ComplexMatrix matrix_exponential_action(const HermitianOperator& h, double t, ExpMode mode) {
  const SpectralDecomposition sd = eig_hermitian(h);
  ComplexVector phases(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    if (mode == ExpMode::Unitary) {
      phases[i] = std::exp(Complex(0.0, -sd.eigenvalues[i] * t));
    } else {
      phases[i] = std::exp(Complex(-sd.eigenvalues[i] * t, 0.0));
    }
  }
  return sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  detail::require_same_dim(x.rows(), y.rows(), "commutator");
  return x * y - y * x;
}

HermitianOperator anticommutator(const HermitianOperator& x, const HermitianOperator& y) {
  detail::require_same_dim(x.dim(), y.dim(), "anticommutator");
  return HermitianOperator(x.matrix() * y.matrix() + y.matrix() * x.matrix());
}

}  // namespace fdt
