#include "canodiv/classical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace canodiv::classical {

PositiveMeasure::PositiveMeasure(Eigen::VectorXd weights) : weights_(std::move(weights)) {
  if (weights_.size() < 1) {
    throw std::invalid_argument("PositiveMeasure: need at least one component");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || !(weights_[i] > 0.0)) {
      std::ostringstream msg;
      msg << "PositiveMeasure: component " << i << " is not strictly positive (" << weights_[i]
          << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

PositiveMeasure::PositiveMeasure(std::initializer_list<double> weights)
    : PositiveMeasure(Eigen::Map<const Eigen::VectorXd>(weights.begin(),
                                                        static_cast<Eigen::Index>(weights.size()))) {}

const numkit::QuadratureRule& default_rule() {
  static const numkit::QuadratureRule rule = numkit::gauss_legendre_rule(kDefaultQuadratureNodes);
  return rule;
}

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* context) {
  if (a != b) {
    std::ostringstream msg;
    msg << context << ": dimension mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

void require_unit_interval(double t, const char* context) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << context << ": t must lie in [0, 1], got " << t;
    throw std::invalid_argument(msg.str());
  }
}

// One coordinate of the alpha-geodesic, kept in log form so that exponents
// near 0 (alpha near 1) and endpoints near each other do not cancel.
struct GeodesicComponent {
  double s;      // (1 - alpha) / 2
  double log_m;  // log((1 - t) p^s + t q^s)
  double delta;  // q^s - p^s

  GeodesicComponent(double p, double q, double s_, double t) : s(s_) {
    const double log_p = std::log(p);
    const double ratio = std::expm1(s * std::log(q / p));
    log_m = s * log_p + std::log1p(t * ratio);
    delta = std::exp(s * log_p) * ratio;
  }

  double position() const { return std::exp(log_m / s); }
  double velocity() const { return std::exp((1.0 / s - 1.0) * log_m) * delta / s; }
  double acceleration() const {
    const double c = (1.0 / s) * (1.0 / s - 1.0);
    if (c == 0.0) return 0.0;
    return c * std::exp((1.0 / s - 2.0) * log_m) * delta * delta;
  }
  // velocity^2 / position
  double fisher_norm_sq() const {
    return std::exp((1.0 / s - 2.0) * log_m) * delta * delta / (s * s);
  }
};

void check_geodesic_args(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                         double t, const char* context) {
  require_same_dim(p.dim(), q.dim(), context);
  alpha.require_geodesic(context);
  require_unit_interval(t, context);
}

}  // namespace

double fisher_metric(const PositiveMeasure& p, const TangentVec& x, const TangentVec& y) {
  require_same_dim(p.dim(), x.size(), "fisher_metric");
  require_same_dim(p.dim(), y.size(), "fisher_metric");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) sum += x[i] * y[i] / p[i];
  return sum;
}

Eigen::MatrixXd fisher_matrix(const PositiveMeasure& p) {
  return p.weights().cwiseInverse().asDiagonal();
}

numkit::Tensor3 alpha_christoffel(const PositiveMeasure& p, AlphaParam alpha) {
  numkit::Tensor3 gamma(p.dim());
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    gamma(i, i, i) = -alpha.dual_exponent() / p[i];
  }
  return gamma;
}

PositiveMeasure alpha_geodesic(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                               double t) {
  check_geodesic_args(p, q, alpha, t, "alpha_geodesic");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  Eigen::VectorXd out(p.dim());
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    out[i] = GeodesicComponent(p[i], q[i], alpha.embedding_exponent(), t).position();
  }
  return PositiveMeasure(std::move(out));
}

TangentVec geodesic_velocity(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                             double t) {
  check_geodesic_args(p, q, alpha, t, "geodesic_velocity");
  TangentVec out(p.dim());
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    out[i] = GeodesicComponent(p[i], q[i], alpha.embedding_exponent(), t).velocity();
  }
  return out;
}

TangentVec geodesic_acceleration(const PositiveMeasure& p, const PositiveMeasure& q,
                                 AlphaParam alpha, double t) {
  check_geodesic_args(p, q, alpha, t, "geodesic_acceleration");
  TangentVec out(p.dim());
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    out[i] = GeodesicComponent(p[i], q[i], alpha.embedding_exponent(), t).acceleration();
  }
  return out;
}

double alpha_ode_residual(const Eigen::VectorXd& position, const TangentVec& velocity,
                          const TangentVec& acceleration, AlphaParam alpha) {
  require_same_dim(position.size(), velocity.size(), "alpha_ode_residual");
  require_same_dim(position.size(), acceleration.size(), "alpha_ode_residual");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < position.size(); ++i) {
    const double r =
        acceleration[i] - alpha.dual_exponent() * velocity[i] * velocity[i] / position[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double geodesic_ode_residual(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                             double t) {
  return alpha_ode_residual(alpha_geodesic(p, q, alpha, t).weights(),
                            geodesic_velocity(p, q, alpha, t),
                            geodesic_acceleration(p, q, alpha, t), alpha);
}

TangentVec inverse_exponential(const PositiveMeasure& p, const PositiveMeasure& q,
                               AlphaParam alpha) {
  return geodesic_velocity(p, q, alpha, 0.0);
}

Eigen::VectorXd alpha_embedding(const PositiveMeasure& p, AlphaParam alpha) {
  alpha.require_geodesic("alpha_embedding");
  const double s = alpha.embedding_exponent();
  return p.weights().array().pow(s).matrix() / s;
}

Eigen::VectorXd alpha_representation(const PositiveMeasure& p, const TangentVec& x,
                                     AlphaParam alpha) {
  require_same_dim(p.dim(), x.size(), "alpha_representation");
  return p.weights().array().pow(-alpha.dual_exponent()).matrix().cwiseProduct(x);
}

TangentVec alpha_parallel_transport(const PositiveMeasure& p, const PositiveMeasure& p2,
                                    const TangentVec& x, AlphaParam alpha) {
  require_same_dim(p.dim(), p2.dim(), "alpha_parallel_transport");
  require_same_dim(p.dim(), x.size(), "alpha_parallel_transport");
  const Eigen::ArrayXd ratio = p2.weights().array() / p.weights().array();
  return (ratio.pow(alpha.dual_exponent()) * x.array()).matrix();
}

double canonical_integrand(const PositiveMeasure& p, const PositiveMeasure& q, AlphaParam alpha,
                           double t) {
  check_geodesic_args(p, q, alpha, t, "canonical_integrand");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    sum += GeodesicComponent(p[i], q[i], alpha.embedding_exponent(), t).fisher_norm_sq();
  }
  return t * sum;
}

double canonical_divergence_numeric(const PositiveMeasure& p, const PositiveMeasure& q,
                                    AlphaParam alpha, const numkit::QuadratureRule& rule) {
  alpha.require_open("canonical_divergence_numeric");
  require_same_dim(p.dim(), q.dim(), "canonical_divergence_numeric");
  return numkit::integrate([&](double t) { return canonical_integrand(p, q, alpha, t); }, rule);
}

double dual_canonical_divergence(const PositiveMeasure& p, const PositiveMeasure& q,
                                 AlphaParam alpha, const numkit::QuadratureRule& rule) {
  alpha.require_open("dual_canonical_divergence");
  return canonical_divergence_numeric(p, q, alpha.dual(), rule);
}

// With u = (1 + a)/2, v = (1 - a)/2 and r = log(q/p) each summand is
// p (u e^r + v - e^(u r)) / (u v) = p (u expm1(r) - expm1(u r)) / (u v),
// which vanishes exactly when p_i == q_i.
double alpha_divergence_closed(const PositiveMeasure& p, const PositiveMeasure& q,
                               AlphaParam alpha) {
  alpha.require_open("alpha_divergence_closed");
  require_same_dim(p.dim(), q.dim(), "alpha_divergence_closed");
  const double u = alpha.dual_exponent();
  const double v = alpha.embedding_exponent();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    const double r = std::log(q[i] / p[i]);
    sum += p[i] * (u * std::expm1(r) - std::expm1(u * r)) / (u * v);
  }
  return sum;
}

double kl_extended(const PositiveMeasure& p, const PositiveMeasure& q) {
  require_same_dim(p.dim(), q.dim(), "kl_extended");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    const double r = std::log(q[i] / p[i]);
    sum += p[i] * (std::expm1(r) - r);
  }
  return sum;
}

double kl_extended_reversed(const PositiveMeasure& p, const PositiveMeasure& q) {
  return kl_extended(q, p);
}

double relative_entropy(const PositiveMeasure& p, const PositiveMeasure& q) {
  require_same_dim(p.dim(), q.dim(), "relative_entropy");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) sum += p[i] * std::log(p[i] / q[i]);
  return sum;
}

double tsallis_q_divergence(const PositiveMeasure& p, const PositiveMeasure& q, double q_index) {
  if (!(q_index > 0.0 && q_index < 1.0)) {
    std::ostringstream msg;
    msg << "tsallis_q_divergence: q must lie in (0, 1), got " << q_index;
    throw std::invalid_argument(msg.str());
  }
  require_same_dim(p.dim(), q.dim(), "tsallis_q_divergence");
  const double w = 1.0 - q_index;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    const double r = std::log(q[i] / p[i]);
    sum += p[i] * (w * std::expm1(r) - std::expm1(w * r)) / w;
  }
  return sum;
}

}  // namespace canodiv::classical
