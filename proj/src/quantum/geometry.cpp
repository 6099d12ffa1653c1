#include "canodiv/quantum/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "canodiv/numkit/spectral.hpp"

namespace canodiv::quantum {

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

struct GeodesicFrame {
  ComplexMatrix a;  // rho1^s
  ComplexMatrix b;  // rho2^s
  ComplexMatrix mid;
  Spectrum mid_spectrum;
};

GeodesicFrame geodesic_frame(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             AlphaParam alpha, double t, const char* context) {
  require_same_dim(rho1.dim(), rho2.dim(), context);
  alpha.require_geodesic(context);
  require_unit_interval(t, context);
  const double s = alpha.embedding_exponent();
  GeodesicFrame f;
  f.a = rho1.power(s);
  f.b = rho2.power(s);
  f.mid = (1.0 - t) * f.a + t * f.b;
  f.mid_spectrum = numkit::hermitian_eig(f.mid);
  return f;
}

}  // namespace

HermitianOperator alpha_embedding(const PositiveOperator& rho, AlphaParam alpha) {
  alpha.require_geodesic("alpha_embedding");
  const double s = alpha.embedding_exponent();
  if (s == 1.0) return HermitianOperator(rho.matrix());
  return HermitianOperator(ComplexMatrix(rho.power(s) / s));
}

HermitianOperator alpha_representation(const PositiveOperator& rho, const QTangent& x,
                                       AlphaParam alpha) {
  alpha.require_geodesic("alpha_representation");
  require_same_dim(rho.dim(), x.dim(), "alpha_representation");
  const double s = alpha.embedding_exponent();
  return HermitianOperator(
      ComplexMatrix(numkit::frechet_power(rho.spectrum(), s, x.matrix()) / s));
}

QTangent tangent_from_representation(const PositiveOperator& rho, const HermitianOperator& z,
                                     AlphaParam alpha) {
  alpha.require_geodesic("tangent_from_representation");
  require_same_dim(rho.dim(), z.dim(), "tangent_from_representation");
  const double s = alpha.embedding_exponent();
  return QTangent(
      ComplexMatrix(numkit::frechet_power_inverse(rho.spectrum(), s, z.matrix()) * s));
}

QTangent alpha_parallel_transport(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                  const QTangent& x, AlphaParam alpha) {
  require_same_dim(rho1.dim(), rho2.dim(), "alpha_parallel_transport");
  return tangent_from_representation(rho2, alpha_representation(rho1, x, alpha), alpha);
}

PositiveOperator alpha_geodesic_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                                  AlphaParam alpha, double t) {
  const GeodesicFrame f = geodesic_frame(rho1, rho2, alpha, t, "alpha_geodesic_q");
  if (t == 0.0) return rho1;
  if (t == 1.0) return rho2;
  const double s = alpha.embedding_exponent();
  return PositiveOperator(numkit::matrix_power(f.mid_spectrum, 1.0 / s));
}

QTangent geodesic_velocity_q(const PositiveOperator& rho1, const PositiveOperator& rho2,
                             AlphaParam alpha, double t) {
  const GeodesicFrame f = geodesic_frame(rho1, rho2, alpha, t, "geodesic_velocity_q");
  const double s = alpha.embedding_exponent();
  return QTangent(numkit::frechet_power(f.mid_spectrum, 1.0 / s, f.b - f.a));
}

VelocityRepresentations velocity_representations(const PositiveOperator& rho1,
                                                 const PositiveOperator& rho2, AlphaParam alpha,
                                                 double t) {
  alpha.require_open("velocity_representations");
  const GeodesicFrame f = geodesic_frame(rho1, rho2, alpha, t, "velocity_representations");
  const double s = alpha.embedding_exponent();
  const double u = alpha.dual_exponent();
  const double beta = u / s;
  const ComplexMatrix v = f.b - f.a;
  return {HermitianOperator(ComplexMatrix(v / s)),
          HermitianOperator(ComplexMatrix(numkit::frechet_power(f.mid_spectrum, beta, v) / u))};
}

double wyd_metric(const PositiveOperator& rho, const QTangent& x, const QTangent& y,
                  AlphaParam alpha) {
  alpha.require_open("wyd_metric");
  const HermitianOperator xa = alpha_representation(rho, x, alpha);
  const HermitianOperator yd = alpha_representation(rho, y, alpha.dual());
  return real_trace_product(xa.matrix(), yd.matrix());
}

Eigen::VectorXd theta_coordinates(const PositiveOperator& rho, AlphaParam alpha) {
  const ComplexMatrix l = alpha_embedding(rho, alpha).matrix();
  const std::vector<ComplexMatrix> basis = hermitian_basis(rho.dim());
  Eigen::VectorXd theta(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    theta[static_cast<Eigen::Index>(i)] = real_trace_product(basis[i], l);
  }
  return theta;
}

PositiveOperator operator_from_theta(const Eigen::VectorXd& theta, Eigen::Index n,
                                     AlphaParam alpha) {
  alpha.require_geodesic("operator_from_theta");
  if (theta.size() != n * n) {
    throw std::invalid_argument("operator_from_theta: expected n^2 coordinates");
  }
  const std::vector<ComplexMatrix> basis = hermitian_basis(n);
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    l += theta[static_cast<Eigen::Index>(i)] * basis[i];
  }
  const double s = alpha.embedding_exponent();
  const Spectrum sp = numkit::hermitian_eig(ComplexMatrix(s * l));
  return PositiveOperator(numkit::matrix_power(sp, 1.0 / s));
}

Eigen::MatrixXd wyd_components_theta(const PositiveOperator& rho, AlphaParam alpha) {
  alpha.require_open("wyd_components_theta");
  const double s = alpha.embedding_exponent();
  const double u = alpha.dual_exponent();
  const double beta = u / s;
  // l_{-alpha} = c * l_alpha^beta, so d_j l_{-alpha} = c * D[x^beta](l_alpha)[A_j].
  const double c = std::pow(s, beta) / u;
  const Spectrum l_spectrum = numkit::hermitian_eig(alpha_embedding(rho, alpha).matrix());
  const std::vector<ComplexMatrix> basis = hermitian_basis(rho.dim());
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<ComplexMatrix> dual_derivs;
  dual_derivs.reserve(basis.size());
  for (const ComplexMatrix& a : basis) {
    dual_derivs.push_back(c * numkit::frechet_power(l_spectrum, beta, a));
  }
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = real_trace_product(basis[static_cast<std::size_t>(i)],
                                   dual_derivs[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

}  // namespace canodiv::quantum
