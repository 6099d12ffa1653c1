#pragma once

// Geometry of the cone of positive measures on {1, ..., n}: Fisher metric,
// alpha-connections and their geodesics, the canonical divergence by
// geodesic quadrature, and the closed-form alpha / KL / Tsallis divergences.

#include <initializer_list>

#include <Eigen/Core>

#include "canodiv/alpha.hpp"
#include "canodiv/numkit/quadrature.hpp"
#include "canodiv/numkit/tensor3.hpp"

namespace canodiv::classical {

/// Strictly positive weights p_1, ..., p_n with n >= 1.
class PositiveMeasure {
 public:
  explicit PositiveMeasure(Eigen::VectorXd weights);
  PositiveMeasure(std::initializer_list<double> weights);

  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::Index dim() const { return weights_.size(); }
  double operator[](Eigen::Index i) const { return weights_[i]; }

  friend bool operator==(const PositiveMeasure& a, const PositiveMeasure& b) {
    return a.weights_ == b.weights_;
  }

 private:
  Eigen::VectorXd weights_;
};

/// Components in the Dirac basis; the base point is implicit.
using TangentVec = Eigen::VectorXd;

/// Gauss-Legendre order used by the canonical divergences by default.
inline constexpr int kDefaultQuadratureNodes = 64;

/// The 64-node rule, built once.
const numkit::QuadratureRule& default_rule();

double fisher_metric(const PositiveMeasure& p, const TangentVec& x, const TangentVec& y);
Eigen::MatrixXd fisher_matrix(const PositiveMeasure& p);

/// Gamma^k_{ij} of the alpha-connection in the Dirac coordinates, stored at
/// (k, i, j): -((1 + alpha) / 2) delta_ij delta_jk / p_i. Accepts alpha in [-1, 1].
numkit::Tensor3 alpha_christoffel(const PositiveMeasure& p, AlphaParam alpha);

/// The alpha-geodesic from p (t = 0) to q (t = 1):
/// ((1 - t) p^s + t q^s)^(1/s) with s = (1 - alpha) / 2, componentwise.
PositiveMeasure alpha_geodesic(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                               double t);
TangentVec geodesic_velocity(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                             double t);
TangentVec geodesic_acceleration(const PositiveMeasure& p, const PositiveMeasure& q,
                                 AlphaParam alpha, double t);

/// max_i |acc_i - ((1 + alpha) / 2) vel_i^2 / pos_i| for an arbitrary curve sample.
double alpha_ode_residual(const Eigen::VectorXd& position, const TangentVec& velocity,
                          const TangentVec& acceleration, AlphaParam alpha);
/// The residual above evaluated on the closed-form alpha-geodesic.
double geodesic_ode_residual(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                             double t);

/// exp_p^{-1}(q): the geodesic velocity at t = 0.
TangentVec inverse_exponential(const PositiveMeasure& p, const PositiveMeasure& q,
                               AlphaParam alpha);

/// l_alpha(p) = (2 / (1 - alpha)) p^((1 - alpha) / 2), componentwise.
Eigen::VectorXd alpha_embedding(const PositiveMeasure& p, AlphaParam alpha);
/// Pushforward of x under l_alpha at p: p^(-(1 + alpha) / 2) x.
Eigen::VectorXd alpha_representation(const PositiveMeasure& p, const TangentVec& x,
                                     AlphaParam alpha);
/// Moves x from p to p2 keeping its alpha-representation fixed.
TangentVec alpha_parallel_transport(const PositiveMeasure& p, const PositiveMeasure& p2,
                                    const TangentVec& x, AlphaParam alpha);

/// t * ||d/dt gamma(t)||^2 in the Fisher metric along the alpha-geodesic.
double canonical_integrand(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                           double t);

/// Integral of t ||gamma'(t)||^2 over [0, 1] along the alpha-geodesic p -> q.
double canonical_divergence_numeric(const PositiveMeasure& p, const PositiveMeasure& q,
                                    AlphaParam alpha,
                                    const numkit::QuadratureRule& rule = default_rule());

/// The same integral along the (-alpha)-geodesic p -> q.
double dual_canonical_divergence(const PositiveMeasure& p, const PositiveMeasure& q,
                                 AlphaParam alpha,
                                 const numkit::QuadratureRule& rule = default_rule());

/// sum_i 2/(1-a) q_i + 2/(1+a) p_i - 4/(1-a^2) q_i^((1+a)/2) p_i^((1-a)/2).
double alpha_divergence_closed(const PositiveMeasure& p, const PositiveMeasure& q,
                               AlphaParam alpha);

/// sum_i q_i - p_i - p_i log(q_i / p_i), the alpha -> -1 limit.
double kl_extended(const PositiveMeasure& p, const PositiveMeasure& q);
/// sum_i p_i - q_i - q_i log(p_i / q_i), the alpha -> +1 limit.
double kl_extended_reversed(const PositiveMeasure& p, const PositiveMeasure& q);
/// sum_i p_i log(p_i / q_i); agrees with kl_extended when both sum to one.
double relative_entropy(const PositiveMeasure& p, const PositiveMeasure& q);

/// Tsallis q-divergence, q_index in (0, 1).
double tsallis_q_divergence(const PositiveMeasure& p, const PositiveMeasure& q, double q_index);

}  // namespace canodiv::classical
