#include "canodiv/sampling.hpp"

#include <cmath>

#include <Eigen/QR>

namespace canodiv::sampling {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Eigen::Index Sampler::dimension(Eigen::Index lo, Eigen::Index hi) {
  return std::uniform_int_distribution<Eigen::Index>(lo, hi)(engine_);
}

classical::PositiveMeasure Sampler::measure(Eigen::Index n, double lo, double hi) {
  Eigen::VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i) w[i] = uniform(lo, hi);
  return classical::PositiveMeasure(std::move(w));
}

quantum::ComplexMatrix Sampler::unitary(Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  quantum::ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = {normal(engine_), normal(engine_)};
  }
  Eigen::HouseholderQR<quantum::ComplexMatrix> qr(z);
  quantum::ComplexMatrix q = qr.householderQ();
  const quantum::ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

quantum::PositiveOperator Sampler::positive_operator(Eigen::Index n, double lo, double hi) {
  Eigen::VectorXd lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) lambda[i] = uniform(lo, hi);
  return quantum::PositiveOperator::from_spectrum(lambda, unitary(n));
}

quantum::DensityOperator Sampler::density_operator(Eigen::Index n, double lo, double hi) {
  return quantum::DensityOperator::normalized(positive_operator(n, lo, hi));
}

quantum::HermitianOperator Sampler::hermitian(Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  quantum::ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = {normal(engine_), normal(engine_)};
  }
  return quantum::HermitianOperator(quantum::ComplexMatrix((z + z.adjoint()) / 2.0));
}

}  // namespace canodiv::sampling
