#include "canodiv/quantum/divergences.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "canodiv/quantum/geometry.hpp"

namespace canodiv::quantum {

const numkit::QuadratureRule& default_rule() {
  static const numkit::QuadratureRule rule = numkit::gauss_legendre_rule(64);
  return rule;
}

namespace {

void require_same_dim(const PositiveOperator& a, const PositiveOperator& b, const char* context) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << context << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Every closed-form divergence here is a trace functional of the form
//   Tr f(rho1, rho2) = sum_ij |<u_i|w_j>|^2 f(lambda_i, mu_j)
// with rho1 = sum lambda_i |u_i><u_i| and rho2 = sum mu_j |w_j><w_j|. Each
// scalar term below is a nonnegative two-point divergence that vanishes when
// lambda_i == mu_j, which keeps the operator versions nonnegative and exactly
// zero on coinciding arguments.
template <typename F>
double spectral_pairing(const PositiveOperator& rho1, const PositiveOperator& rho2, F&& term) {
  const ComplexMatrix overlap =
      rho1.spectrum().eigenvectors.adjoint() * rho2.spectrum().eigenvectors;
  const Eigen::VectorXd& lambda = rho1.spectrum().eigenvalues;
  const Eigen::VectorXd& mu = rho2.spectrum().eigenvalues;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      const double w = std::norm(overlap(i, j));
      if (w == 0.0) continue;
      sum += w * term(lambda[i], mu[j]);
    }
  }
  return sum;
}

void require_q_open(double q_index, const char* context) {
  if (!(q_index > 0.0 && q_index < 1.0)) {
    std::ostringstream msg;
    msg << context << ": q must lie in (0, 1), got " << q_index;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double canonical_integrand_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             AlphaParam alpha, double t) {
  const VelocityRepresentations v = velocity_representations(rho1, rho2, alpha, t);
  return t * real_trace_product(v.alpha_rep.matrix(), v.dual_rep.matrix());
}

double canonical_divergence_numeric_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                      AlphaParam alpha, const numkit::QuadratureRule& rule) {
  alpha.require_open("canonical_divergence_numeric_q");
  require_same_dim(rho1, rho2, "canonical_divergence_numeric_q");

  // Same quantities as velocity_representations, with the endpoint powers
  // hoisted out of the node loop.
  const double s = alpha.embedding_exponent();
  const double u = alpha.dual_exponent();
  const double beta = u / s;
  const ComplexMatrix a = rho1.power(s);
  const ComplexMatrix b = rho2.power(s);
  const ComplexMatrix v = b - a;
  return numkit::integrate(
      [&](double t) {
        const ComplexMatrix mid = (1.0 - t) * a + t * b;
        const Spectrum sp = numkit::hermitian_eig(mid);
        const ComplexMatrix dual_rep = numkit::frechet_power(sp, beta, v) / u;
        return t * real_trace_product(ComplexMatrix(v / s), dual_rep);
      },
      rule);
}

// Scalar term with u = (1+a)/2, v = (1-a)/2, r = log(mu/lambda):
// (v lambda + u mu - lambda^v mu^u) / (u v) = lambda (u expm1(r) - expm1(u r)) / (u v).
double quantum_alpha_divergence_closed(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                       AlphaParam alpha) {
  alpha.require_open("quantum_alpha_divergence_closed");
  require_same_dim(rho1, rho2, "quantum_alpha_divergence_closed");
  const double u = alpha.dual_exponent();
  const double v = alpha.embedding_exponent();
  return spectral_pairing(rho1, rho2, [u, v](double l, double m) {
    const double r = std::log(m / l);
    return l * (u * std::expm1(r) - std::expm1(u * r)) / (u * v);
  });
}

double quantum_relative_entropy(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                RelativeEntropyForm form) {
  require_same_dim(rho1, rho2, "quantum_relative_entropy");
  if (form == RelativeEntropyForm::Extended) {
    return spectral_pairing(rho1, rho2, [](double l, double m) {
      const double r = std::log(m / l);
      return l * (std::expm1(r) - r);
    });
  }
  return spectral_pairing(rho1, rho2, [](double l, double m) { return l * std::log(l / m); });
}

double quantum_q_divergence(const PositiveOperator& rho1, const PositiveOperator& rho2,
                            double q_index) {
  require_q_open(q_index, "quantum_q_divergence");
  require_same_dim(rho1, rho2, "quantum_q_divergence");
  const double w = 1.0 - q_index;
  return spectral_pairing(rho1, rho2, [w](double l, double m) {
    const double r = std::log(m / l);
    return l * (w * std::expm1(r) - std::expm1(w * r)) / w;
  });
}

double furuichi_q_divergence(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             double q_index) {
  if (!(q_index >= 0.0 && q_index < 1.0)) {
    std::ostringstream msg;
    msg << "furuichi_q_divergence: q must lie in [0, 1), got " << q_index;
    throw std::invalid_argument(msg.str());
  }
  require_same_dim(rho1, rho2, "furuichi_q_divergence");
  const double w = 1.0 - q_index;
  return spectral_pairing(rho1, rho2, [w](double l, double m) {
    return -l * std::expm1(w * std::log(m / l)) / w;
  });
}

// On density operators 1 = Tr rho1, so the bracket is paired term by term as
// lambda - lambda^v mu^u.
double density_alpha_divergence(const DensityOperator& rho1, const DensityOperator& rho2,
                                 AlphaParam alpha) {
  alpha.require_open("density_alpha_divergence");
  require_same_dim(rho1, rho2, "density_alpha_divergence");
  const double u = alpha.dual_exponent();
  const double v = alpha.embedding_exponent();
  return spectral_pairing(rho1, rho2, [u, v](double l, double m) {
    return -l * std::expm1(u * std::log(m / l)) / (u * v);
  });
}

}  // namespace canodiv::quantum
