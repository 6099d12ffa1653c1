#pragma once

// Hermitian eigendecomposition and the spectral calculus built on it:
// fractional powers, logarithms and Daleckii-Krein Frechet derivatives of
// x -> x^s. Everything is templated on the scalar so real symmetric and
// complex Hermitian matrices share one code path.

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "canodiv/errors.hpp"

namespace canodiv::numkit {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Relative tolerance on ||H - H^dagger||_F accepted before symmetrizing.
inline constexpr double kHermitianTolerance = 1e-12;
/// Relative eigenvalue gap below which a divided difference is replaced by
/// the derivative at the midpoint.
inline constexpr double kDegenerateThreshold = 1e-8;
/// Positive definite means lambda_min > kPositivityThreshold * lambda_max.
inline constexpr double kPositivityThreshold = 1e-12;

template <typename Scalar>
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix<Scalar> eigenvectors;  // columns, unitary

  Eigen::Index dim() const { return eigenvalues.size(); }
  double smallest() const { return eigenvalues[0]; }
  double largest() const { return eigenvalues[dim() - 1]; }

  Matrix<Scalar> reconstruct() const {
    return eigenvectors * eigenvalues.template cast<Scalar>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).norm();
}

/// Validates that h is Hermitian within kHermitianTolerance * ||h||_F,
/// symmetrizes it and diagonalizes.
template <typename Derived>
SpectralDecomposition<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw std::invalid_argument("hermitian_eig: matrix must be square and non-empty");
  }
  if (!h.allFinite()) {
    throw std::invalid_argument("hermitian_eig: matrix has non-finite entries");
  }
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance * h.norm()) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (||H - H^dagger||_F = " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  const Matrix<Scalar> sym = (h + h.adjoint()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalDomainError("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Scalar>
void require_positive_definite(const SpectralDecomposition<Scalar>& d, const char* context) {
  const double lo = d.smallest();
  const double hi = d.largest();
  if (!(lo > 0.0) || !(lo > kPositivityThreshold * hi)) {
    std::ostringstream msg;
    msg << context << ": operator is not positive definite (smallest eigenvalue " << lo
        << ", largest " << hi << ")";
    throw NotPositiveDefiniteError(msg.str(), lo);
  }
}

/// U * diag(f(lambda)) * U^dagger, symmetrized.
template <typename Scalar, typename F>
Matrix<Scalar> apply_spectral(const SpectralDecomposition<Scalar>& d, F&& f) {
  Eigen::VectorXd mapped(d.dim());
  for (Eigen::Index i = 0; i < d.dim(); ++i) mapped[i] = f(d.eigenvalues[i]);
  Matrix<Scalar> out =
      d.eigenvectors * mapped.template cast<Scalar>().asDiagonal() * d.eigenvectors.adjoint();
  return (out + out.adjoint()) / Scalar(2);
}

template <typename Scalar>
Matrix<Scalar> matrix_power(const SpectralDecomposition<Scalar>& d, double s) {
  require_positive_definite(d, "matrix_power");
  if (s == 0.0) return Matrix<Scalar>::Identity(d.dim(), d.dim());
  if (s == 1.0) return d.reconstruct();
  return apply_spectral(d, [s](double x) { return std::pow(x, s); });
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& rho, double s) {
  return matrix_power(hermitian_eig(rho), s);
}

template <typename Scalar>
Matrix<Scalar> matrix_log(const SpectralDecomposition<Scalar>& d) {
  require_positive_definite(d, "matrix_log");
  return apply_spectral(d, [](double x) { return std::log(x); });
}

template <typename Derived>
Matrix<typename Derived::Scalar> matrix_log(const Eigen::MatrixBase<Derived>& rho) {
  return matrix_log(hermitian_eig(rho));
}

/// First divided differences of x^s on a positive spectrum.
///
/// Entry (i, j) is (l_i^s - l_j^s) / (l_i - l_j), or s * m^(s-1) at the
/// midpoint m when |l_i - l_j| <= kDegenerateThreshold * max(l_i, l_j).
/// The numerator is formed as l_j^s * expm1(s * log1p((l_i - l_j) / l_j))
/// so nearly equal eigenvalues above the threshold keep full precision.
inline Eigen::MatrixXd power_divided_differences(const Eigen::VectorXd& lambda, double s) {
  const Eigen::Index n = lambda.size();
  Eigen::MatrixXd delta(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double li = lambda[i];
      const double lj = lambda[j];
      const double gap = li - lj;
      if (std::abs(gap) <= kDegenerateThreshold * std::max(li, lj)) {
        const double mid = 0.5 * (li + lj);
        delta(i, j) = s * std::pow(mid, s - 1.0);
      } else {
        delta(i, j) = std::pow(lj, s) * std::expm1(s * std::log1p(gap / lj)) / gap;
      }
    }
  }
  return delta;
}

/// Directional derivative of rho -> rho^s at rho in direction x
/// (Daleckii-Krein): U * ((U^dagger x U) o Delta) * U^dagger.
template <typename Scalar, typename Derived>
Matrix<Scalar> frechet_power(const SpectralDecomposition<Scalar>& d, double s,
                             const Eigen::MatrixBase<Derived>& x) {
  require_positive_definite(d, "frechet_power");
  if (x.rows() != d.dim() || x.cols() != d.dim()) {
    throw std::invalid_argument("frechet_power: direction has the wrong dimension");
  }
  const Eigen::MatrixXd delta = power_divided_differences(d.eigenvalues, s);
  const Matrix<Scalar> xt = d.eigenvectors.adjoint() * x * d.eigenvectors;
  const Matrix<Scalar> yt = xt.cwiseProduct(delta.template cast<Scalar>());
  Matrix<Scalar> out = d.eigenvectors * yt * d.eigenvectors.adjoint();
  return (out + out.adjoint()) / Scalar(2);
}

template <typename Derived, typename DerivedX>
Matrix<typename Derived::Scalar> frechet_power(const Eigen::MatrixBase<Derived>& rho, double s,
                                               const Eigen::MatrixBase<DerivedX>& x) {
  return frechet_power(hermitian_eig(rho), s, x);
}

/// Solves frechet_power(d, s, x) = y for x. Requires s != 0 (the derivative
/// of x^0 is the zero map).
template <typename Scalar, typename Derived>
Matrix<Scalar> frechet_power_inverse(const SpectralDecomposition<Scalar>& d, double s,
                                     const Eigen::MatrixBase<Derived>& y) {
  require_positive_definite(d, "frechet_power_inverse");
  if (s == 0.0) {
    throw std::invalid_argument("frechet_power_inverse: the derivative of x^0 is not invertible");
  }
  if (y.rows() != d.dim() || y.cols() != d.dim()) {
    throw std::invalid_argument("frechet_power_inverse: argument has the wrong dimension");
  }
  const Eigen::MatrixXd delta = power_divided_differences(d.eigenvalues, s);
  const Matrix<Scalar> yt = d.eigenvectors.adjoint() * y * d.eigenvectors;
  const Matrix<Scalar> xt = yt.cwiseQuotient(delta.template cast<Scalar>());
  Matrix<Scalar> out = d.eigenvectors * xt * d.eigenvectors.adjoint();
  return (out + out.adjoint()) / Scalar(2);
}

}  // namespace canodiv::numkit
