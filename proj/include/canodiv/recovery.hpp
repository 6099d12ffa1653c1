#pragma once

// Recovers the dualistic structure (g, Gamma, Gamma*) of a divergence from
// its mixed partial derivatives on the diagonal, and checks the duality
// relation and flatness of what comes out.

#include <functional>

#include <Eigen/Core>

#include "canodiv/alpha.hpp"
#include "canodiv/classical.hpp"
#include "canodiv/numkit/finite_difference.hpp"
#include "canodiv/quantum/operators.hpp"

namespace canodiv::recovery {

using numkit::BivariateFunction;
using numkit::FDConfig;
using numkit::Tensor3;

/// Step 1e-3 with Richardson-extrapolated stencils. Second derivatives use
/// the step as given, third derivatives ten times it.
inline constexpr FDConfig kDefaultConfig{1e-3, 4};

struct RecoveredStructure {
  Eigen::MatrixXd metric;    // g_ij = -d_i d'_j D
  Tensor3 christoffel;       // Gamma_ijk = -d_i d_j d'_k D
  Tensor3 christoffel_dual;  // Gamma*_ijk = -d'_i d'_j d_k D
  Eigen::VectorXd point;
  double step = 0.0;
};

/// Step used for third-order partials.
double connection_step(const FDConfig& cfg);

/// Metric only. Throws std::invalid_argument if D(p, p) > 1e-12.
Eigen::MatrixXd recover_metric(const BivariateFunction& d, const Eigen::VectorXd& p,
                               const FDConfig& cfg = kDefaultConfig);

/// Throws NotPositiveDefiniteError when the recovered metric is not positive
/// definite (smallest eigenvalue <= 1e-10 * max(1, largest)). With order-2
/// stencils a degenerate divergence can show up as an O(step^2) metric;
/// order 4 removes that.
RecoveredStructure recover_structure(const BivariateFunction& d, const Eigen::VectorXd& p,
                                     const FDConfig& cfg = kDefaultConfig);

/// max_ijk |d_k g_ij - Gamma_kij - Gamma*_kji|, with d_k g by central
/// differences of recovered metrics at p +/- step e_k.
double duality_defect(const RecoveredStructure& s, const BivariateFunction& d,
                      const FDConfig& cfg = kDefaultConfig);

/// Raised Christoffel symbols Gamma^l_ij = g^{lk} Gamma_ijk, stored at (l, i, j).
Tensor3 raise_christoffel(const Eigen::MatrixXd& metric, const Tensor3& lowered);

/// Max-abs component of the Riemann tensors of both recovered connections.
/// Only offered for up to four coordinates.
double curvature_max(const BivariateFunction& d, const Eigen::VectorXd& p,
                     const FDConfig& cfg = kDefaultConfig);

inline constexpr Eigen::Index kMaxCurvatureDim = 4;

/// Wraps a divergence on positive measures as a function of coordinates.
BivariateFunction classical_chart(
    std::function<double(const classical::PositiveMeasure&, const classical::PositiveMeasure&)> d);

/// Wraps a divergence on n x n positive operators as a function of the
/// alpha-affine theta coordinates of quantum::theta_coordinates.
BivariateFunction theta_chart(
    std::function<double(const quantum::PositiveOperator&, const quantum::PositiveOperator&)> d,
    Eigen::Index n, AlphaParam chart_alpha);

/// (1/2) |p - q|^2, the self-dual flat reference.
double half_squared_euclidean(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

}  // namespace canodiv::recovery
