// Dense complex linear-algebra substrate for finite-dimensional quantum
// systems: Hermitian operators, density matrices, spectral decompositions,
// matrix exponentials and symmetrized correlations.
//
// Conventions: hbar = k_B = 1 throughout. Energies and frequencies share one
// unit, times carry its inverse, temperatures are energies.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace fdt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

constexpr double kHermitianTol = 1e-12;   // relative to max-norm
constexpr double kTraceTol = 1e-10;
constexpr double kPositivityFloor = -1e-12;

/// Thrown when an operator or state fails its structural invariants.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

double max_abs(const ComplexMatrix& m);

/// Complex square matrix equal to its conjugate transpose within
/// kHermitianTol (relative). Inputs passing the check are symmetrized to
/// (M + M^dagger)/2 so Hermiticity cannot drift downstream.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const ComplexMatrix& matrix() const { return entries_; }

  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator zero(Eigen::Index dim);

  HermitianOperator scaled(double factor) const;
  HermitianOperator plus(const HermitianOperator& other) const;

 private:
  ComplexMatrix entries_;
};

/// Unit-trace positive-semidefinite Hermitian operator. Positivity is
/// enforced up to an eigenvalue floor of kPositivityFloor.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op);

  Eigen::Index dim() const { return op_.dim(); }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const HermitianOperator& op() const { return op_; }

  static DensityMatrix maximally_mixed(Eigen::Index dim);
  static DensityMatrix pure(const ComplexVector& psi);

  double min_eigenvalue() const;

 private:
  HermitianOperator op_;
};

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

SpectralDecomposition eig_hermitian(const HermitianOperator& m);

/// Gibbs state exp(-beta*H0)/Z via spectral decomposition, with the spectrum
/// shifted by its minimum before exponentiation so large beta cannot
/// overflow. Returns the state and log Z.
std::pair<DensityMatrix, double> thermal_state(const HermitianOperator& h0, double beta);

/// Tr[B rho]. The imaginary residue must be below 1e-12 relative; it is
/// asserted and discarded.
double expectation(const DensityMatrix& rho, const HermitianOperator& b);

/// (1/2) Tr[rho (XY + YX)] - Tr[rho X] Tr[rho Y].
double symmetrized_correlation(const DensityMatrix& rho, const HermitianOperator& x,
                               const HermitianOperator& y);

enum class ExpMode {
  Unitary,  // exp(-i H t)
  Real,     // exp(-H t)
};

/// exp(-iHt) or exp(-Ht) through the spectral decomposition of H.
ComplexMatrix matrix_exponential_action(const HermitianOperator& h, double t, ExpMode mode);

/// XY - YX (anti-Hermitian for Hermitian inputs).
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// XY + YX as a HermitianOperator.
HermitianOperator anticommutator(const HermitianOperator& x, const HermitianOperator& y);

namespace detail {
void require_same_dim(Eigen::Index a, Eigen::Index b, const char* where);
}

}  // namespace fdt
