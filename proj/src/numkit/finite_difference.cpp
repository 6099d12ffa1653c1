#include "canodiv/numkit/finite_difference.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "canodiv/errors.hpp"

namespace canodiv::numkit {

void FDConfig::validate() const {
  if (!(step >= 1e-6 && step <= 1e-1)) {
    std::ostringstream msg;
    msg << "finite-difference step must lie in [1e-6, 1e-1], got " << step;
    throw std::invalid_argument(msg.str());
  }
  if (order != 2 && order != 4) {
    throw std::invalid_argument("finite-difference order must be 2 or 4, got " +
                                std::to_string(order));
  }
}

namespace {

double evaluate(const BivariateFunction& f, const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  const double v = f(p, q);
  if (!std::isfinite(v)) {
    throw NumericalDomainError("finite-difference stencil produced a non-finite value");
  }
  return v;
}

double central_stencil(const BivariateFunction& f, const Eigen::VectorXd& p,
                       const Eigen::VectorXd& q, std::span<const Arg> slots,
                       std::span<const Eigen::Index> indices, double h) {
  const std::size_t k = slots.size();

  // Repeated derivative along one coordinate of one block: 3-point stencil.
  if (k == 2 && slots[0] == slots[1] && indices[0] == indices[1]) {
    Eigen::VectorXd pp = p;
    Eigen::VectorXd qq = q;
    Eigen::VectorXd& x = slots[0] == Arg::First ? pp : qq;
    const double x0 = x[indices[0]];
    x[indices[0]] = x0 + h;
    const double fp = evaluate(f, pp, qq);
    x[indices[0]] = x0 - h;
    const double fm = evaluate(f, pp, qq);
    x[indices[0]] = x0;
    const double f0 = evaluate(f, pp, qq);
    return (fp - 2.0 * f0 + fm) / (h * h);
  }

  // Product stencil: sum over sign patterns of prod(sign) * f(shifted) / (2h)^k.
  double sum = 0.0;
  const unsigned combos = 1u << k;
  for (unsigned mask = 0; mask < combos; ++mask) {
    Eigen::VectorXd pp = p;
    Eigen::VectorXd qq = q;
    double sign = 1.0;
    for (std::size_t s = 0; s < k; ++s) {
      const double sigma = (mask >> s) & 1u ? -1.0 : 1.0;
      sign *= sigma;
      Eigen::VectorXd& x = slots[s] == Arg::First ? pp : qq;
      x[indices[s]] += sigma * h;
    }
    sum += sign * evaluate(f, pp, qq);
  }
  return sum / std::pow(2.0 * h, static_cast<double>(k));
}

}  // namespace

double mixed_partial(const BivariateFunction& f, const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                     std::span<const Arg> slots, std::span<const Eigen::Index> indices,
                     const FDConfig& cfg) {
  cfg.validate();
  if (slots.size() != indices.size() || slots.size() < 2 || slots.size() > 3) {
    throw std::invalid_argument("mixed_partial: expected two or three derivative slots");
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto n = slots[s] == Arg::First ? p.size() : q.size();
    if (indices[s] < 0 || indices[s] >= n) {
      throw std::invalid_argument("mixed_partial: coordinate index out of range");
    }
  }
  const double h = cfg.step;
  const double coarse = central_stencil(f, p, q, slots, indices, h);
  if (cfg.order == 2) return coarse;
  const double wide = central_stencil(f, p, q, slots, indices, 2.0 * h);
  return (4.0 * coarse - wide) / 3.0;
}

Eigen::MatrixXd mixed_partials(const BivariateFunction& f, const Eigen::VectorXd& p,
                               const Eigen::VectorXd& q, const std::array<Arg, 2>& pattern,
                               const FDConfig& cfg) {
  const Eigen::Index rows = pattern[0] == Arg::First ? p.size() : q.size();
  const Eigen::Index cols = pattern[1] == Arg::First ? p.size() : q.size();
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const std::array<Eigen::Index, 2> idx{i, j};
      out(i, j) = mixed_partial(f, p, q, pattern, idx, cfg);
    }
  }
  return out;
}

Tensor3 mixed_partials(const BivariateFunction& f, const Eigen::VectorXd& p,
                       const Eigen::VectorXd& q, const std::array<Arg, 3>& pattern,
                       const FDConfig& cfg) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("mixed_partials: third-order tensors need equal block sizes");
  }
  const Eigen::Index n = p.size();
  Tensor3 out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const std::array<Eigen::Index, 3> idx{i, j, k};
        out(i, j, k) = mixed_partial(f, p, q, pattern, idx, cfg);
      }
    }
  }
  return out;
}

}  // namespace canodiv::numkit
