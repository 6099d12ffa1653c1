#pragma once

#include "canodiv/alpha.hpp"
#include "canodiv/numkit/quadrature.hpp"
#include "canodiv/quantum/operators.hpp"

namespace canodiv::quantum {

const numkit::QuadratureRule& default_rule();

/// t * Tr(gamma'^(alpha) gamma'^(-alpha)) along the alpha-geodesic rho1 -> rho2.
double canonical_integrand_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             AlphaParam alpha, double t);

/// Canonical divergence: integral over [0, 1] of t times the squared WYD
/// norm of the alpha-geodesic velocity.
double canonical_divergence_numeric_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                      AlphaParam alpha,
                                      const numkit::QuadratureRule& rule = default_rule());

/// (4 / (1 - a^2)) Tr((1-a)/2 rho1 + (1+a)/2 rho2 - rho1^((1-a)/2) rho2^((1+a)/2)).
double quantum_alpha_divergence_closed(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                       AlphaParam alpha);

enum class RelativeEntropyForm {
  /// Tr rho1 (log rho1 - log rho2)
  Standard,
  /// Tr(rho2 - rho1 + rho1 log rho1 - rho1 log rho2), the alpha -> -1 limit
  /// on the whole cone.
  Extended,
};

double quantum_relative_entropy(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                RelativeEntropyForm form = RelativeEntropyForm::Standard);

/// (1 / (1 - q)) Tr(q rho1 + (1 - q) rho2 - rho1^q rho2^(1-q)), q in (0, 1).
double quantum_q_divergence(const PositiveOperator& rho1, const PositiveOperator& rho2,
                            double q_index);

/// (Tr rho1 - Tr(rho1^q rho2^(1-q))) / (1 - q), q in [0, 1).
double furuichi_q_divergence(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             double q_index);

/// (4 / (1 - a^2)) (1 - Tr(rho1^((1-a)/2) rho2^((1+a)/2))) on density operators.
double density_alpha_divergence(const DensityOperator& rho1, const DensityOperator& rho2,
                                AlphaParam alpha);

}  // namespace canodiv::quantum
