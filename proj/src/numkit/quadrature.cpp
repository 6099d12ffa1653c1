#include "canodiv/numkit/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace canodiv::numkit {

namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre_rule(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre_rule: n must be >= 1, got " + std::to_string(n));
  }
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.5;
    rule.weights[0] = 1.0;
    return rule;
  }

  // Roots come in +/- pairs; solve for the positive half by Newton from the
  // Tricomi initial guess and mirror.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      auto [p, d] = legendre_with_derivative(n, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; write ascending on [0, 1].
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[n - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

}  // namespace canodiv::numkit
