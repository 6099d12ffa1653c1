#include "canodiv/recovery.hpp"

#include <algorithm>
#include <array>
#include <vector>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "canodiv/errors.hpp"
#include "canodiv/quantum/geometry.hpp"

namespace canodiv::recovery {

using numkit::Arg;

double connection_step(const FDConfig& cfg) { return std::min(10.0 * cfg.step, 1e-1); }

Eigen::MatrixXd recover_metric(const BivariateFunction& d, const Eigen::VectorXd& p,
                               const FDConfig& cfg) {
  cfg.validate();
  const double diag = d(p, p);
  if (!(std::abs(diag) <= 1e-12)) {
    std::ostringstream msg;
    msg << "recover_structure: D(p, p) = " << diag << " is not zero; not a divergence at p";
    throw std::invalid_argument(msg.str());
  }
  const Eigen::MatrixXd g = -numkit::mixed_partials(d, p, p, std::array<Arg, 2>{Arg::First, Arg::Second}, cfg);
  return 0.5 * (g + g.transpose());
}

RecoveredStructure recover_structure(const BivariateFunction& d, const Eigen::VectorXd& p,
                                     const FDConfig& cfg) {
  RecoveredStructure s;
  s.point = p;
  s.step = cfg.step;
  s.metric = recover_metric(d, p, cfg);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.metric, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 1e-10 * std::max(1.0, hi))) {
    std::ostringstream msg;
    msg << "recover_structure: recovered metric is not positive definite (smallest eigenvalue "
        << lo << ")";
    throw NotPositiveDefiniteError(msg.str(), lo);
  }

  FDConfig third = cfg;
  third.step = connection_step(cfg);
  Tensor3 gamma = numkit::mixed_partials(d, p, p, std::array<Arg, 3>{Arg::First, Arg::First, Arg::Second}, third);
  Tensor3 gamma_dual =
      numkit::mixed_partials(d, p, p, std::array<Arg, 3>{Arg::Second, Arg::Second, Arg::First}, third);
  const Eigen::Index n = p.size();
  s.christoffel = Tensor3(n);
  s.christoffel_dual = Tensor3(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        s.christoffel(i, j, k) = -gamma(i, j, k);
        s.christoffel_dual(i, j, k) = -gamma_dual(i, j, k);
      }
    }
  }
  return s;
}

namespace {

Eigen::MatrixXd central_metric_difference(const BivariateFunction& d, const Eigen::VectorXd& p,
                                          Eigen::Index k, double h, const FDConfig& cfg) {
  Eigen::VectorXd plus = p;
  Eigen::VectorXd minus = p;
  plus[k] += h;
  minus[k] -= h;
  return (recover_metric(d, plus, cfg) - recover_metric(d, minus, cfg)) / (2.0 * h);
}

// d_k g at p; Richardson-extrapolated like the stencils when order is 4.
Eigen::MatrixXd metric_derivative(const BivariateFunction& d, const Eigen::VectorXd& p,
                                  Eigen::Index k, double h, const FDConfig& cfg) {
  const Eigen::MatrixXd fine = central_metric_difference(d, p, k, h, cfg);
  if (cfg.order != 4) return fine;
  const Eigen::MatrixXd coarse = central_metric_difference(d, p, k, 2.0 * h, cfg);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

double duality_defect(const RecoveredStructure& s, const BivariateFunction& d,
                      const FDConfig& cfg) {
  const Eigen::Index n = s.point.size();
  const double h = cfg.step;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::MatrixXd dg = metric_derivative(d, s.point, k, h, cfg);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double r = dg(i, j) - s.christoffel(k, i, j) - s.christoffel_dual(k, j, i);
        worst = std::max(worst, std::abs(r));
      }
    }
  }
  return worst;
}

Tensor3 raise_christoffel(const Eigen::MatrixXd& metric, const Tensor3& lowered) {
  const Eigen::Index n = metric.rows();
  const Eigen::MatrixXd inv = metric.inverse();
  Tensor3 raised(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        double sum = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) sum += inv(l, k) * lowered(i, j, k);
        raised(l, i, j) = sum;
      }
    }
  }
  return raised;
}

namespace {

// R^l_{ijk} = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik, with
// dgamma[i] holding d_i G.
double riemann_max(const Tensor3& gamma, const std::vector<Tensor3>& dgamma) {
  const Eigen::Index n = gamma.dim();
  double worst = 0.0;
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          double r = dgamma[static_cast<std::size_t>(i)](l, j, k) -
                     dgamma[static_cast<std::size_t>(j)](l, i, k);
          for (Eigen::Index m = 0; m < n; ++m) {
            r += gamma(l, i, m) * gamma(m, j, k) - gamma(l, j, m) * gamma(m, i, k);
          }
          worst = std::max(worst, std::abs(r));
        }
      }
    }
  }
  return worst;
}

}  // namespace

double curvature_max(const BivariateFunction& d, const Eigen::VectorXd& p, const FDConfig& cfg) {
  const Eigen::Index n = p.size();
  if (n > kMaxCurvatureDim) {
    std::ostringstream msg;
    msg << "curvature_max: only offered for up to " << kMaxCurvatureDim << " coordinates, got "
        << n;
    throw std::invalid_argument(msg.str());
  }
  const double h = connection_step(cfg);
  const RecoveredStructure center = recover_structure(d, p, cfg);
  const Tensor3 gamma = raise_christoffel(center.metric, center.christoffel);
  const Tensor3 gamma_dual = raise_christoffel(center.metric, center.christoffel_dual);

  std::vector<Tensor3> dgamma;
  std::vector<Tensor3> dgamma_dual;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd plus = p;
    Eigen::VectorXd minus = p;
    plus[i] += h;
    minus[i] -= h;
    const RecoveredStructure sp = recover_structure(d, plus, cfg);
    const RecoveredStructure sm = recover_structure(d, minus, cfg);
    const Tensor3 gp = raise_christoffel(sp.metric, sp.christoffel);
    const Tensor3 gm = raise_christoffel(sm.metric, sm.christoffel);
    const Tensor3 gdp = raise_christoffel(sp.metric, sp.christoffel_dual);
    const Tensor3 gdm = raise_christoffel(sm.metric, sm.christoffel_dual);
    Tensor3 dg(n);
    Tensor3 dgd(n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index c = 0; c < n; ++c) {
          dg(a, b, c) = (gp(a, b, c) - gm(a, b, c)) / (2.0 * h);
          dgd(a, b, c) = (gdp(a, b, c) - gdm(a, b, c)) / (2.0 * h);
        }
      }
    }
    dgamma.push_back(std::move(dg));
    dgamma_dual.push_back(std::move(dgd));
  }
  return std::max(riemann_max(gamma, dgamma), riemann_max(gamma_dual, dgamma_dual));
}

BivariateFunction classical_chart(
    std::function<double(const classical::PositiveMeasure&, const classical::PositiveMeasure&)> d) {
  return [d = std::move(d)](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    return d(classical::PositiveMeasure(p), classical::PositiveMeasure(q));
  };
}

BivariateFunction theta_chart(
    std::function<double(const quantum::PositiveOperator&, const quantum::PositiveOperator&)> d,
    Eigen::Index n, AlphaParam chart_alpha) {
  return [d = std::move(d), n, chart_alpha](const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    return d(quantum::operator_from_theta(p, n, chart_alpha),
             quantum::operator_from_theta(q, n, chart_alpha));
  };
}

double half_squared_euclidean(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return 0.5 * (p - q).squaredNorm();
}

}  // namespace canodiv::recovery
