#include "canodiv/quantum/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "canodiv/errors.hpp"

namespace canodiv::quantum {

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("HermitianOperator: matrix has non-finite entries");
  }
  const double defect = numkit::hermiticity_defect(m);
  if (defect > numkit::kHermitianTolerance * std::max(1.0, m.norm())) {
    std::ostringstream msg;
    msg << "HermitianOperator: matrix is not Hermitian (||H - H^dagger||_F = " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  m_ = (m + m.adjoint()) / 2.0;
}

HermitianOperator HermitianOperator::from_real(const Eigen::MatrixXd& m) {
  return HermitianOperator(ComplexMatrix(m.cast<Complex>()));
}

PositiveOperator::PositiveOperator(const HermitianOperator& h)
    : h_(h), spectrum_(numkit::hermitian_eig(h.matrix())) {
  numkit::require_positive_definite(spectrum_, "PositiveOperator");
}

PositiveOperator PositiveOperator::from_real(const Eigen::MatrixXd& m) {
  return PositiveOperator(HermitianOperator::from_real(m));
}

PositiveOperator PositiveOperator::from_spectrum(const Eigen::VectorXd& eigenvalues,
                                                 const ComplexMatrix& eigenvectors) {
  const ComplexMatrix m =
      eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  return PositiveOperator(ComplexMatrix((m + m.adjoint()) / 2.0));
}

DensityOperator::DensityOperator(const PositiveOperator& rho) : PositiveOperator(rho) {
  const double tr = trace();
  if (!(std::abs(tr - 1.0) <= 1e-12)) {
    std::ostringstream msg;
    msg << "DensityOperator: trace must be 1, got " << tr;
    throw std::invalid_argument(msg.str());
  }
}

DensityOperator DensityOperator::normalized(const PositiveOperator& rho) {
  return DensityOperator(PositiveOperator(ComplexMatrix(rho.matrix() / rho.trace())));
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw std::invalid_argument("real_trace_product: dimension mismatch");
  }
  // Tr(ab) = sum_ij a_ij b_ji, without forming the product.
  const Complex tr = a.cwiseProduct(b.transpose()).sum();
  if (std::abs(tr.imag()) > 1e-10 * (1.0 + std::abs(tr.real()))) {
    std::ostringstream msg;
    msg << "trace of a Hermitian product has imaginary part " << tr.imag() << " (real part "
        << tr.real() << ")";
    throw InternalConsistencyError(msg.str());
  }
  return tr.real();
}

std::vector<ComplexMatrix> hermitian_basis(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("hermitian_basis: dimension must be >= 1");
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  basis.push_back(ComplexMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n)));

  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = r;
      a(k, j) = r;
      basis.push_back(std::move(a));
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = Complex(0.0, -r);
      a(k, j) = Complex(0.0, r);
      basis.push_back(std::move(a));
    }
  }
  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    const double c = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) a(j, j) = c;
    a(l, l) = -static_cast<double>(l) * c;
    basis.push_back(std::move(a));
  }
  return basis;
}

}  // namespace canodiv::quantum
