#pragma once

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "canodiv/errors.hpp"

namespace canodiv::numkit {

/// Nodes and weights of a rule normalized to [0, 1].
///
/// Nodes are strictly increasing inside (0, 1); weights are positive and sum
/// to one.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule mapped to [0, 1], exact for polynomials of
/// degree 2n - 1. Throws std::invalid_argument for n < 1.
QuadratureRule gauss_legendre_rule(int n);

/// Sum of weights * f(nodes), accumulated left to right over the nodes.
///
/// No adaptivity: callers refine by asking for a larger rule. A non-finite
/// integrand value raises NumericalDomainError naming the offending node.
template <typename F>
double integrate(F&& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < rule.size(); ++k) {
    const double t = rule.nodes[k];
    const double value = f(t);
    if (!std::isfinite(value)) {
      throw NumericalDomainError("integrand is not finite at node " + std::to_string(k) +
                                 " (t = " + std::to_string(t) + ")");
    }
    sum += rule.weights[k] * value;
  }
  return sum;
}

}  // namespace canodiv::numkit
