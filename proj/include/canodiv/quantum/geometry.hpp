#pragma once

// Alpha-geometry of the cone of positive definite Hermitian operators:
// alpha-embedding and -representation, flat alpha-parallel transport,
// alpha-geodesics, the Wigner-Yanase-Dyson metric and the affine theta chart.

#include <Eigen/Core>

#include "canodiv/alpha.hpp"
#include "canodiv/quantum/operators.hpp"

namespace canodiv::quantum {

/// l_alpha(rho) = (2 / (1 - alpha)) rho^((1 - alpha) / 2). Requires alpha < 1.
HermitianOperator alpha_embedding(const PositiveOperator& rho, AlphaParam alpha);

/// Pushforward of x under l_alpha at rho (Daleckii-Krein).
HermitianOperator alpha_representation(const PositiveOperator& rho, const QTangent& x,
                                       AlphaParam alpha);

/// The tangent vector at rho whose alpha-representation is z.
QTangent tangent_from_representation(const PositiveOperator& rho, const HermitianOperator& z,
                                     AlphaParam alpha);

/// Transports x from rho1 to rho2 by keeping its alpha-representation fixed.
QTangent alpha_parallel_transport(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                  const QTangent& x, AlphaParam alpha);

/// ((1 - t) rho1^s + t rho2^s)^(1/s) with s = (1 - alpha) / 2, i.e. the
/// straight line between l_alpha(rho1) and l_alpha(rho2) mapped back.
PositiveOperator alpha_geodesic_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                  AlphaParam alpha, double t);

/// d/dt of alpha_geodesic_q as a point-space tangent vector.
QTangent geodesic_velocity_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             AlphaParam alpha, double t);

/// The (alpha)- and (-alpha)-representations of the geodesic velocity at t.
///
/// With A = rho1^s, B = rho2^s and M = (1 - t) A + t B:
///   alpha_rep = (B - A) / s
///   dual_rep  = (2 / (1 + alpha)) * D[x^beta](M)[B - A],  beta = (1 + alpha) / (1 - alpha)
/// where D[f](M) is the Frechet derivative. Their trace pairing is the
/// squared WYD norm of the velocity.
struct VelocityRepresentations {
  HermitianOperator alpha_rep;
  HermitianOperator dual_rep;
};
VelocityRepresentations velocity_representations(const PositiveOperator& rho1,
                                                 const PositiveOperator& rho2, AlphaParam alpha,
                                                 double t);

/// Tr(X^(alpha) Y^(-alpha)). Requires |alpha| < 1.
double wyd_metric(const PositiveOperator& rho, const QTangent& x, const QTangent& y,
                  AlphaParam alpha);

/// theta-coordinates of rho: l_alpha(rho) = sum_i theta_i A_i over hermitian_basis.
Eigen::VectorXd theta_coordinates(const PositiveOperator& rho, AlphaParam alpha);
/// Inverse of theta_coordinates; throws NotPositiveDefiniteError when
/// sum_i theta_i A_i is not positive definite.
PositiveOperator operator_from_theta(const Eigen::VectorXd& theta, Eigen::Index n,
                                     AlphaParam alpha);

/// Components g_ij = Tr(d_i l_alpha  d_j l_{-alpha}) of the WYD metric in the
/// theta chart.
Eigen::MatrixXd wyd_components_theta(const PositiveOperator& rho, AlphaParam alpha);

}  // namespace canodiv::quantum
