#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "canodiv/errors.hpp"
#include "canodiv/numkit/quadrature.hpp"

using canodiv::numkit::gauss_legendre_rule;
using canodiv::numkit::integrate;

TEST_CASE("one-point rule is the midpoint") {
  const auto rule = gauss_legendre_rule(1);
  REQUIRE(rule.size() == 1);
  CHECK(rule.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two-point rule matches the textbook nodes") {
  const auto rule = gauss_legendre_rule(2);
  const double offset = 0.5 / std::sqrt(3.0);
  CHECK(std::abs(rule.nodes[0] - (0.5 - offset)) < 1e-15);
  CHECK(std::abs(rule.nodes[1] - (0.5 + offset)) < 1e-15);
  CHECK(std::abs(rule.weights[0] - 0.5) < 1e-15);
  CHECK(std::abs(rule.weights[1] - 0.5) < 1e-15);
}

TEST_CASE("rules are symmetric, increasing and normalized") {
  for (int n : {3, 7, 16, 64, 128}) {
    CAPTURE(n);
    const auto rule = gauss_legendre_rule(n);
    CHECK(std::abs(rule.weights.sum() - 1.0) < 1e-14);
    for (Eigen::Index k = 0; k < n; ++k) {
      CHECK(rule.nodes[k] > 0.0);
      CHECK(rule.nodes[k] < 1.0);
      CHECK(rule.weights[k] > 0.0);
      if (k > 0) CHECK(rule.nodes[k] > rule.nodes[k - 1]);
      CHECK(std::abs(rule.nodes[k] + rule.nodes[n - 1 - k] - 1.0) < 1e-15);
      CHECK(std::abs(rule.weights[k] - rule.weights[n - 1 - k]) < 1e-15);
    }
  }
}

TEST_CASE("n-point rule integrates monomials up to degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 10, 64}) {
    const auto rule = gauss_legendre_rule(n);
    const int max_degree = std::min(2 * n - 1, 40);
    for (int k = 0; k <= max_degree; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const double v = integrate([k](double t) { return std::pow(t, k); }, rule);
      CHECK(std::abs(v - 1.0 / (k + 1)) < 1e-14);
    }
  }
}

TEST_CASE("degree 2n is no longer exact") {
  const auto rule = gauss_legendre_rule(3);
  const double v = integrate([](double t) { return std::pow(t, 6); }, rule);
  CHECK(std::abs(v - 1.0 / 7.0) > 1e-6);
}

TEST_CASE("smooth integrands converge to machine precision") {
  const auto rule = gauss_legendre_rule(64);
  CHECK(std::abs(integrate([](double t) { return std::exp(t); }, rule) - std::expm1(1.0)) < 1e-15);
  CHECK(std::abs(integrate([](double t) { return 1.0 / (1.0 + t); }, rule) - std::log(2.0)) <
        1e-15);
}

TEST_CASE("invalid orders and non-finite integrands are rejected") {
  CHECK_THROWS_AS(gauss_legendre_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre_rule(-3), std::invalid_argument);
  const auto rule = gauss_legendre_rule(8);
  CHECK_THROWS_AS(integrate([&rule](double t) { return 1.0 / (t - rule.nodes[3]); }, rule),
                  canodiv::NumericalDomainError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, rule),
                  canodiv::NumericalDomainError);
}
