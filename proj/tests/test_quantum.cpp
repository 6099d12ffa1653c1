#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "canodiv/classical.hpp"
#include "canodiv/errors.hpp"
#include "canodiv/quantum/divergences.hpp"
#include "canodiv/quantum/geometry.hpp"
#include "canodiv/sampling.hpp"

using namespace canodiv;
using namespace canodiv::quantum;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

namespace {

PositiveOperator diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v[i++] = x;
  return PositiveOperator::from_real(v.asDiagonal().toDenseMatrix());
}

PositiveOperator diag(const Eigen::VectorXd& v) {
  return PositiveOperator::from_real(v.asDiagonal().toDenseMatrix());
}

PositiveOperator worked_rho1() {
  MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  return PositiveOperator::from_real(m);
}

double fro(const MatrixXcd& m) { return m.norm(); }

// Oracles built from explicit matrix powers and traces.
MatrixXcd mpow(const PositiveOperator& r, double s) {
  Eigen::ComplexEigenSolver<MatrixXcd> es(r.matrix());
  MatrixXcd d = MatrixXcd::Zero(r.dim(), r.dim());
  for (Eigen::Index i = 0; i < r.dim(); ++i) d(i, i) = std::pow(es.eigenvalues()[i].real(), s);
  return es.eigenvectors() * d * es.eigenvectors().inverse();
}

MatrixXcd mlog(const PositiveOperator& r) {
  Eigen::ComplexEigenSolver<MatrixXcd> es(r.matrix());
  MatrixXcd d = MatrixXcd::Zero(r.dim(), r.dim());
  for (Eigen::Index i = 0; i < r.dim(); ++i) d(i, i) = std::log(es.eigenvalues()[i].real());
  return es.eigenvectors() * d * es.eigenvectors().inverse();
}

double alpha_oracle(const PositiveOperator& a, const PositiveOperator& b, double al) {
  const double s = (1 - al) / 2;
  const double u = (1 + al) / 2;
  const MatrixXcd m = s * a.matrix() + u * b.matrix() - mpow(a, s) * mpow(b, u);
  return 4.0 / (1 - al * al) * m.trace().real();
}

}  // namespace

TEST_CASE("operator types validate on construction") {
  MatrixXcd m(2, 2);
  m << 1.0, std::complex<double>(0, 1), std::complex<double>(0, 1), 1.0;
  CHECK_THROWS_AS(HermitianOperator{m}, std::invalid_argument);
  CHECK_THROWS_AS(HermitianOperator{MatrixXcd(2, 3)}, std::invalid_argument);
  MatrixXd indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(PositiveOperator::from_real(indefinite), NotPositiveDefiniteError);
  CHECK_THROWS_AS(DensityOperator(diag({1, 2})), std::invalid_argument);
  CHECK_NOTHROW(DensityOperator(diag({0.25, 0.75})));
  const auto d = DensityOperator::normalized(worked_rho1());
  CHECK(std::abs(d.trace() - 1.0) < 1e-15);

  MatrixXcd h = MatrixXcd::Identity(2, 2);
  h(0, 1) = std::complex<double>(0.5, 1e-14);
  h(1, 0) = std::complex<double>(0.5, 0.0);
  const HermitianOperator near(h);
  CHECK(near.matrix()(0, 1) == std::conj(near.matrix()(1, 0)));
}

TEST_CASE("imaginary trace residue is an internal error") {
  MatrixXcd a = MatrixXcd::Zero(2, 2);
  a(0, 0) = std::complex<double>(1, 1);
  CHECK_THROWS_AS(real_trace_product(a, MatrixXcd::Identity(2, 2)), InternalConsistencyError);
  CHECK(real_trace_product(worked_rho1().matrix(), MatrixXcd::Identity(2, 2)) == 4.0);
}

TEST_CASE("Hermitian basis is orthonormal") {
  for (Eigen::Index n : {1, 2, 3, 5}) {
    const auto basis = hermitian_basis(n);
    REQUIRE(basis.size() == static_cast<std::size_t>(n * n));
    CHECK(fro(basis[0] - MatrixXcd::Identity(n, n) / std::sqrt(double(n))) < 1e-15);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(fro(basis[i] - basis[i].adjoint()) == 0.0);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::complex<double> ip = (basis[i] * basis[j]).trace();
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-15);
      }
    }
  }
}

TEST_CASE("alpha-embedding and representation") {
  CHECK(fro(alpha_embedding(worked_rho1(), AlphaParam(-1.0)).matrix() - worked_rho1().matrix()) <
        1e-15);
  const auto l = alpha_embedding(diag({4, 9}), AlphaParam(0.0));
  CHECK(std::abs(l.matrix()(0, 0) - 4.0) < 1e-15);
  CHECK(std::abs(l.matrix()(1, 1) - 6.0) < 1e-15);

  const auto x = QTangent::from_real((MatrixXd(2, 2) << 0, 1, 1, 0).finished());
  const auto rep = alpha_representation(diag({1, 4}), x, AlphaParam(0.0));
  CHECK(fro(rep.matrix() - (2.0 / 3.0) * x.matrix()) < 1e-15);

  sampling::Sampler rng(21);
  const auto rho = rng.positive_operator(3);
  const auto y = rng.hermitian(3);
  CHECK(fro(alpha_representation(rho, y, AlphaParam(-1.0)).matrix() - y.matrix()) < 1e-14);
  const auto id = PositiveOperator::from_real(MatrixXd::Identity(3, 3));
  CHECK(fro(alpha_representation(id, y, AlphaParam(0.4)).matrix() - y.matrix()) < 1e-14);
  // Pushforward agrees with a finite difference of the embedding.
  const AlphaParam a(0.3);
  const double h = 1e-6;
  const MatrixXcd fd = (alpha_embedding(PositiveOperator(MatrixXcd(rho.matrix() + h * y.matrix())), a)
                            .matrix() -
                        alpha_embedding(PositiveOperator(MatrixXcd(rho.matrix() - h * y.matrix())), a)
                            .matrix()) /
                       (2 * h);
  CHECK(fro(fd - alpha_representation(rho, y, a).matrix()) < 1e-8);
  CHECK(fro(tangent_from_representation(rho, alpha_representation(rho, y, a), a).matrix() -
            y.matrix()) < 1e-12);
}

TEST_CASE("alpha-parallel transport") {
  sampling::Sampler rng(22);
  const auto r1 = rng.positive_operator(3);
  const auto r2 = rng.positive_operator(3);
  const auto r3 = rng.positive_operator(3);
  const auto x = rng.hermitian(3);
  const AlphaParam a(0.6);
  CHECK(fro(alpha_parallel_transport(r1, r1, x, a).matrix() - x.matrix()) < 1e-13);
  const auto loop = alpha_parallel_transport(
      r3, r1, alpha_parallel_transport(r2, r3, alpha_parallel_transport(r1, r2, x, a), a), a);
  CHECK(fro(loop.matrix() - x.matrix()) < 1e-10);

  const auto d1 = diag({1.0, 2.0});
  const auto d2 = diag({3.0, 0.5});
  const auto xd = QTangent::from_real(Eigen::Vector2d(1.5, -2.0).asDiagonal().toDenseMatrix());
  const auto yd = alpha_parallel_transport(d1, d2, xd, a);
  CHECK(std::abs(yd.matrix()(0, 0).real() - 1.5 * std::pow(3.0, 0.8)) < 1e-13);
  CHECK(std::abs(yd.matrix()(1, 1).real() + 2.0 * std::pow(0.25, 0.8)) < 1e-13);
}

TEST_CASE("quantum alpha-geodesics") {
  sampling::Sampler rng(23);
  const auto r1 = rng.positive_operator(4);
  const auto r2 = rng.positive_operator(4);
  const AlphaParam a(-0.2);
  CHECK(fro(alpha_geodesic_q(r1, r2, a, 0.0).matrix() - r1.matrix()) < 1e-11);
  CHECK(fro(alpha_geodesic_q(r1, r2, a, 1.0).matrix() - r2.matrix()) < 1e-11);
  const auto mix = alpha_geodesic_q(r1, r2, AlphaParam(-1.0), 0.35);
  CHECK(fro(mix.matrix() - (0.65 * r1.matrix() + 0.35 * r2.matrix())) < 1e-13);
  CHECK_THROWS_AS(alpha_geodesic_q(r1, r2, a, 1.2), std::invalid_argument);

  const classical::PositiveMeasure p{1, 2, 0.5};
  const classical::PositiveMeasure q{3, 0.25, 4};
  const auto g = alpha_geodesic_q(diag(p.weights()), diag(q.weights()), AlphaParam(0.4), 0.3);
  const auto gc = classical::alpha_geodesic(p, q, AlphaParam(0.4), 0.3);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(std::abs(g.matrix()(i, i).real() - gc[i]) < 1e-13);

  const double h = 1e-6;
  const MatrixXcd fd = (alpha_geodesic_q(r1, r2, a, 0.4 + h).matrix() -
                        alpha_geodesic_q(r1, r2, a, 0.4 - h).matrix()) /
                       (2 * h);
  CHECK(fro(fd - geodesic_velocity_q(r1, r2, a, 0.4).matrix()) < 1e-7 * (1 + fro(fd)));
}

TEST_CASE("velocity representations") {
  sampling::Sampler rng(24);
  const auto r1 = rng.positive_operator(3);
  const auto r2 = rng.positive_operator(3);
  const AlphaParam a(0.5);
  const auto same = velocity_representations(r1, r1, a, 0.3);
  CHECK(fro(same.alpha_rep.matrix()) == 0.0);
  CHECK(fro(same.dual_rep.matrix()) == 0.0);
  const auto mix = velocity_representations(r1, r2, AlphaParam(-0.999999), 0.7);
  CHECK(fro(mix.alpha_rep.matrix() - (r2.matrix() - r1.matrix())) < 1e-5);

  // Both representations are the alpha / -alpha representations of the
  // point-space velocity.
  const double t = 0.6;
  const auto g = alpha_geodesic_q(r1, r2, a, t);
  const auto v = geodesic_velocity_q(r1, r2, a, t);
  const auto reps = velocity_representations(r1, r2, a, t);
  CHECK(fro(alpha_representation(g, v, a).matrix() - reps.alpha_rep.matrix()) < 1e-12);
  CHECK(fro(alpha_representation(g, v, a.dual()).matrix() - reps.dual_rep.matrix()) < 1e-12);

  // Commuting endpoints reduce to the classical integrand.
  const Eigen::Vector3d p(1, 2, 0.5);
  const Eigen::Vector3d q(3, 0.25, 4);
  const auto dr = velocity_representations(diag(p), diag(q), a, t);
  const double pairing = real_trace_product(dr.alpha_rep.matrix(), dr.dual_rep.matrix());
  const double classical_value =
      classical::canonical_integrand(classical::PositiveMeasure(p), classical::PositiveMeasure(q),
                                     a, t) /
      t;
  CHECK(std::abs(pairing - classical_value) < 1e-13 * (1 + classical_value));
}

TEST_CASE("WYD metric") {
  sampling::Sampler rng(25);
  const auto x = rng.hermitian(3);
  const auto y = rng.hermitian(3);
  const auto id = PositiveOperator::from_real(MatrixXd::Identity(3, 3));
  CHECK(std::abs(wyd_metric(id, x, y, AlphaParam(0.3)) -
                 (x.matrix() * y.matrix()).trace().real()) < 1e-13);

  const Eigen::Vector3d rd(0.5, 2, 3);
  const Eigen::Vector3d xd(1, -1, 2);
  const auto xdo = QTangent::from_real(xd.asDiagonal().toDenseMatrix());
  const double fisher = (xd.array().square() / rd.array()).sum();
  CHECK(std::abs(wyd_metric(diag(rd), xdo, xdo, AlphaParam(0.7)) - fisher) < 1e-13);

  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = rng.positive_operator(4);
    const auto a = rng.hermitian(4);
    const auto b = rng.hermitian(4);
    const AlphaParam al(rng.uniform(-0.9, 0.9));
    const double ab = wyd_metric(rho, a, b, al);
    CHECK(std::abs(ab - wyd_metric(rho, b, a, al)) < 1e-12 * (1 + std::abs(ab)));
    CHECK(std::abs(ab - wyd_metric(rho, b, a, al.dual())) < 1e-12 * (1 + std::abs(ab)));
    CHECK(wyd_metric(rho, a, a, al) > 0.0);
  }
}

TEST_CASE("theta chart and metric components") {
  sampling::Sampler rng(26);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = rng.positive_operator(3);
    const AlphaParam a(rng.uniform(-0.9, 0.9));
    const auto theta = theta_coordinates(rho, a);
    CHECK(fro(operator_from_theta(theta, 3, a).matrix() - rho.matrix()) < 1e-12);

    const MatrixXd g = wyd_components_theta(rho, a);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(g);
    CHECK(eig.eigenvalues().minCoeff() > 0.0);

    // Components are the WYD pairing of the coordinate vectors d/dtheta_i.
    const auto basis = hermitian_basis(3);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto ei = tangent_from_representation(rho, HermitianOperator(basis[i]), a);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto ej = tangent_from_representation(rho, HermitianOperator(basis[j]), a);
        CHECK(std::abs(g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                       wyd_metric(rho, ei, ej, a)) < 1e-11);
      }
    }
  }

  const auto id = PositiveOperator::from_real(MatrixXd::Identity(2, 2));
  CHECK((wyd_components_theta(id, AlphaParam(0.0)) - MatrixXd::Identity(4, 4)).norm() < 1e-14);

  // A multiple of the identity: the trace form Tr(A_i l^(2a/(1-a)) A_j) with
  // prefactor (2/(1-a)) ((1-a)/2)^((1+a)/(1-a)).
  const double al = 0.4;
  const auto scaled = PositiveOperator::from_real(2.5 * MatrixXd::Identity(2, 2));
  const double lam = 2.0 / (1 - al) * std::pow(2.5, (1 - al) / 2);
  const double expected =
      2.0 / (1 - al) * std::pow((1 - al) / 2, (1 + al) / (1 - al)) * std::pow(lam, 2 * al / (1 - al));
  CHECK((wyd_components_theta(scaled, AlphaParam(al)) - expected * MatrixXd::Identity(4, 4))
            .norm() < 1e-13);

  CHECK_THROWS_AS(operator_from_theta(Eigen::VectorXd::Zero(3), 2, AlphaParam(0.0)),
                  std::invalid_argument);
  Eigen::VectorXd neg = Eigen::VectorXd::Zero(4);
  neg[0] = -1.0;
  CHECK_THROWS_AS(operator_from_theta(neg, 2, AlphaParam(0.0)), NotPositiveDefiniteError);
}

TEST_CASE("worked quantum example") {
  const auto r1 = worked_rho1();
  const auto r2 = diag({1, 2});
  const AlphaParam zero(0.0);
  // Tr(sqrt(rho1) sqrt(rho2)) = ((sqrt3 + 1)/2)(1 + sqrt2): the diagonal of
  // sqrt(rho1) paired with diag(1, sqrt2).
  const double tr = (std::sqrt(3.0) + 1.0) / 2.0 * (1.0 + std::sqrt(2.0));
  CHECK(std::abs(alpha_oracle(r1, r2, 0.0) - 4.0 * (3.5 - tr)) < 1e-13);
  CHECK(std::abs(quantum_alpha_divergence_closed(r1, r2, zero) - 4.0 * (3.5 - tr)) < 1e-13);
  CHECK(std::abs(canonical_divergence_numeric_q(r1, r2, zero) - 4.0 * (3.5 - tr)) < 1e-9);
  CHECK(std::abs(4.0 * (3.5 - tr) - 0.8084917745497009) < 1e-14);

  CHECK(std::abs(canonical_divergence_numeric_q(diag({1, 2}), diag({2, 1}), zero) -
                 (12.0 - 8.0 * std::sqrt(2.0))) < 1e-10);
  CHECK(canonical_divergence_numeric_q(r1, r1, AlphaParam(0.3)) == 0.0);
}

TEST_CASE("closed forms agree with explicit matrix formulas") {
  sampling::Sampler rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.dimension(2, 5);
    const auto r1 = rng.positive_operator(n);
    const auto r2 = rng.positive_operator(n);
    const double al = rng.uniform(-0.95, 0.95);
    const double oracle = alpha_oracle(r1, r2, al);
    CHECK(std::abs(quantum_alpha_divergence_closed(r1, r2, AlphaParam(al)) - oracle) <
          1e-11 * (1 + std::abs(oracle)));

    const MatrixXcd l1 = mlog(r1);
    const MatrixXcd l2 = mlog(r2);
    const double std_re = (r1.matrix() * (l1 - l2)).trace().real();
    const double ext_re = (r2.matrix() - r1.matrix()).trace().real() + std_re;
    CHECK(std::abs(quantum_relative_entropy(r1, r2) - std_re) < 1e-11 * (1 + std::abs(std_re)));
    CHECK(std::abs(quantum_relative_entropy(r1, r2, RelativeEntropyForm::Extended) - ext_re) <
          1e-11 * (1 + std::abs(ext_re)));

    const double qi = rng.uniform(0.05, 0.95);
    const MatrixXcd cross = mpow(r1, qi) * mpow(r2, 1 - qi);
    const double qdiv =
        (qi * r1.matrix() + (1 - qi) * r2.matrix() - cross).trace().real() / (1 - qi);
    const double furu = (r1.trace() - cross.trace().real()) / (1 - qi);
    CHECK(std::abs(quantum_q_divergence(r1, r2, qi) - qdiv) < 1e-11 * (1 + std::abs(qdiv)));
    CHECK(std::abs(furuichi_q_divergence(r1, r2, qi) - furu) < 1e-11 * (1 + std::abs(furu)));
  }
}

TEST_CASE("canonical divergence equals the quantum alpha-divergence") {
  sampling::Sampler rng(28);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.dimension(2, 6);
    const auto r1 = rng.positive_operator(n);
    const auto r2 = rng.positive_operator(n);
    for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      const double closed = quantum_alpha_divergence_closed(r1, r2, AlphaParam(a));
      const double numeric = canonical_divergence_numeric_q(r1, r2, AlphaParam(a));
      worst = std::max(worst, std::abs(numeric - closed) / (1 + std::abs(closed)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("q-divergences") {
  sampling::Sampler rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = rng.dimension(2, 5);
    const auto r1 = rng.positive_operator(n);
    const auto r2 = rng.positive_operator(n);
    const double qi = rng.uniform(0.01, 0.99);
    const AlphaParam a(1 - 2 * qi);
    CHECK(std::abs(quantum_q_divergence(r1, r2, qi) -
                   a.embedding_exponent() * quantum_alpha_divergence_closed(r1, r2, a)) < 1e-13);

    const auto d1 = rng.density_operator(n);
    const auto d2 = rng.density_operator(n);
    CHECK(std::abs(furuichi_q_divergence(d1, d2, qi) - quantum_q_divergence(d1, d2, qi)) < 1e-14);
    CHECK(std::abs(density_alpha_divergence(d1, d2, a) -
                   quantum_alpha_divergence_closed(d1, d2, a)) < 1e-13);
    CHECK(std::abs(density_alpha_divergence(d1, d2, a) - furuichi_q_divergence(d1, d2, qi) / qi) <
          1e-12 * (1 + density_alpha_divergence(d1, d2, a)));
    CHECK(std::abs(furuichi_q_divergence(d1, d1, qi)) < 1e-14);
  }
  const auto two = PositiveOperator::from_real(2 * MatrixXd::Identity(2, 2));
  const auto one = PositiveOperator::from_real(MatrixXd::Identity(2, 2));
  CHECK(furuichi_q_divergence(two, one, 0.5) != doctest::Approx(quantum_q_divergence(two, one, 0.5)));
  CHECK_NOTHROW(furuichi_q_divergence(two, one, 0.0));
  CHECK_THROWS_AS(furuichi_q_divergence(two, one, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quantum_q_divergence(two, one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(quantum_alpha_divergence_closed(two, one, AlphaParam(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(quantum_alpha_divergence_closed(two, PositiveOperator::from_real(MatrixXd::Identity(3, 3)),
                                                  AlphaParam(0.0)),
                  std::invalid_argument);
}

TEST_CASE("relative entropy limits") {
  sampling::Sampler rng(30);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d1 = rng.density_operator(3);
    const auto d2 = rng.density_operator(3);
    const double ext = quantum_relative_entropy(d1, d2, RelativeEntropyForm::Extended);
    CHECK(std::abs(ext - quantum_relative_entropy(d1, d2)) < 1e-14);
    CHECK(std::abs(quantum_alpha_divergence_closed(d1, d2, AlphaParam(-1 + 1e-6)) - ext) < 1e-4);
  }
  const auto r1 = rng.positive_operator(3);
  const auto r2 = rng.positive_operator(3);
  const double ext = quantum_relative_entropy(r1, r2, RelativeEntropyForm::Extended);
  double last = INFINITY;
  for (int k = 2; k <= 6; ++k) {
    const double gap =
        std::abs(quantum_alpha_divergence_closed(r1, r2, AlphaParam(-1 + std::pow(10.0, -k))) - ext);
    CHECK(gap < last);
    last = gap;
  }
  const double rev = quantum_relative_entropy(r2, r1, RelativeEntropyForm::Extended);
  last = INFINITY;
  for (int k = 2; k <= 6; ++k) {
    const double gap =
        std::abs(quantum_alpha_divergence_closed(r1, r2, AlphaParam(1 - std::pow(10.0, -k))) - rev);
    CHECK(gap < last);
    last = gap;
  }
}

TEST_CASE("commuting operators reduce to the classical divergences") {
  sampling::Sampler rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.dimension(1, 6);
    const auto p = rng.measure(n);
    const auto q = rng.measure(n);
    const auto u = rng.unitary(n);
    const auto r1 = PositiveOperator::from_spectrum(p.weights(), u);
    const auto r2 = PositiveOperator::from_spectrum(q.weights(), u);
    const AlphaParam a(rng.uniform(-0.9, 0.9));
    const double qi = rng.uniform(0.05, 0.95);
    CHECK(std::abs(quantum_alpha_divergence_closed(r1, r2, a) -
                   classical::alpha_divergence_closed(p, q, a)) < 1e-12);
    CHECK(std::abs(canonical_divergence_numeric_q(r1, r2, a) -
                   classical::canonical_divergence_numeric(p, q, a)) < 1e-12);
    CHECK(std::abs(quantum_relative_entropy(r1, r2, RelativeEntropyForm::Extended) -
                   classical::kl_extended(p, q)) < 1e-12);
    CHECK(std::abs(quantum_relative_entropy(r1, r2) - classical::relative_entropy(p, q)) < 1e-12);
    CHECK(std::abs(quantum_q_divergence(r1, r2, qi) - classical::tsallis_q_divergence(p, q, qi)) <
          1e-12);
  }
}

TEST_CASE("divergence axioms for quantum divergences") {
  sampling::Sampler rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = rng.dimension(2, 5);
    const auto r1 = rng.positive_operator(n);
    const auto r2 = rng.positive_operator(n);
    const auto d1 = DensityOperator::normalized(r1);
    const auto d2 = DensityOperator::normalized(r2);
    const AlphaParam a(rng.uniform(-0.99, 0.99));
    const double qi = rng.uniform(0.01, 0.99);
    const std::vector<double> values{
        quantum_alpha_divergence_closed(r1, r2, a),
        canonical_divergence_numeric_q(r1, r2, a),
        quantum_relative_entropy(r1, r2, RelativeEntropyForm::Extended),
        quantum_q_divergence(r1, r2, qi),
        quantum_relative_entropy(d1, d2),
        furuichi_q_divergence(d1, d2, qi),
        density_alpha_divergence(d1, d2, a)};
    for (double v : values) CHECK(v > 1e-14);
    const std::vector<double> diagonal{
        quantum_alpha_divergence_closed(r1, r1, a),
        canonical_divergence_numeric_q(r1, r1, a),
        quantum_relative_entropy(r1, r1, RelativeEntropyForm::Extended),
        quantum_q_divergence(r1, r1, qi),
        quantum_relative_entropy(d1, d1),
        furuichi_q_divergence(d1, d1, qi),
        density_alpha_divergence(d1, d1, a)};
    for (double v : diagonal) CHECK(std::abs(v) < 1e-14);
  }
}
