#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "canodiv/numkit/spectral.hpp"

namespace canodiv::quantum {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Spectrum = numkit::SpectralDecomposition<Complex>;

/// Self-adjoint N x N complex matrix. Accepted when
/// ||H - H^dagger||_F <= 1e-12 * max(1, ||H||_F), then symmetrized.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m);
  static HermitianOperator from_real(const Eigen::MatrixXd& m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

/// A tangent vector of the operator cone. The tangent space at every point
/// is the full space of Hermitian operators, so the base point is carried by
/// the operation rather than the value.
using QTangent = HermitianOperator;

/// Hermitian operator with lambda_min > 1e-12 * lambda_max. The spectral
/// decomposition is computed once on construction and never changes.
class PositiveOperator {
 public:
  explicit PositiveOperator(const HermitianOperator& h);
  explicit PositiveOperator(const ComplexMatrix& m) : PositiveOperator(HermitianOperator(m)) {}
  static PositiveOperator from_real(const Eigen::MatrixXd& m);
  /// U diag(lambda) U^dagger.
  static PositiveOperator from_spectrum(const Eigen::VectorXd& eigenvalues,
                                        const ComplexMatrix& eigenvectors);

  const ComplexMatrix& matrix() const { return h_.matrix(); }
  const HermitianOperator& hermitian() const { return h_; }
  const Spectrum& spectrum() const { return spectrum_; }
  Eigen::Index dim() const { return h_.dim(); }
  double trace() const { return spectrum_.eigenvalues.sum(); }

  ComplexMatrix power(double s) const { return numkit::matrix_power(spectrum_, s); }
  ComplexMatrix log() const { return numkit::matrix_log(spectrum_); }

 private:
  HermitianOperator h_;
  Spectrum spectrum_;
};

/// Positive operator with unit trace (|Tr - 1| <= 1e-12).
class DensityOperator : public PositiveOperator {
 public:
  explicit DensityOperator(const PositiveOperator& rho);
  /// rho / Tr(rho).
  static DensityOperator normalized(const PositiveOperator& rho);
};

/// Re Tr(a b). Throws InternalConsistencyError when the imaginary part
/// exceeds 1e-10 * (1 + |real part|).
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Generalized Gell-Mann matrices plus I / sqrt(N), orthonormal under
/// Tr(A_i A_j) = delta_ij. Order: identity, symmetric, antisymmetric, diagonal.
std::vector<ComplexMatrix> hermitian_basis(Eigen::Index n);

}  // namespace canodiv::quantum
