#pragma once

// Seeded random inputs for the verification suites and tests.

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "canodiv/classical.hpp"
#include "canodiv/quantum/operators.hpp"

namespace canodiv::sampling {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Eigen::Index dimension(Eigen::Index lo, Eigen::Index hi);

  /// Weights uniform in [lo, hi].
  classical::PositiveMeasure measure(Eigen::Index n, double lo = 0.1, double hi = 5.0);

  /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
  /// phases of R's diagonal divided out.
  quantum::ComplexMatrix unitary(Eigen::Index n);

  /// U diag(lambda) U^dagger with lambda uniform in [lo, hi].
  quantum::PositiveOperator positive_operator(Eigen::Index n, double lo = 0.2, double hi = 4.0);
  quantum::DensityOperator density_operator(Eigen::Index n, double lo = 0.2, double hi = 4.0);

  /// Random Hermitian matrix with Gaussian entries.
  quantum::HermitianOperator hermitian(Eigen::Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace canodiv::sampling
