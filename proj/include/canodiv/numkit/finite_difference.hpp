#pragma once

#include <array>
#include <functional>
#include <span>

#include <Eigen/Core>

#include "canodiv/numkit/tensor3.hpp"

namespace canodiv::numkit {

/// A scalar function of two coordinate blocks, D(xi_p, xi_q).
using BivariateFunction = std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

/// Which block a derivative slot perturbs: the unprimed derivative acts on
/// the first argument, the primed one on the second.
enum class Arg { First, Second };

struct FDConfig {
  /// Perturbation size, in [1e-6, 1e-1].
  double step = 1e-3;
  /// 2: plain central product stencils. 4: Richardson combination of steps
  /// h and 2h, (4 D(h) - D(2h)) / 3.
  int order = 2;

  void validate() const;
};

/// Central-difference estimate of one mixed partial. slots[k] says which
/// argument the k-th derivative perturbs and indices[k] which coordinate.
/// Two or three slots are supported.
double mixed_partial(const BivariateFunction& f, const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                     std::span<const Arg> slots, std::span<const Eigen::Index> indices,
                     const FDConfig& cfg);

/// All second-order partials for a pattern, entry (i, j).
Eigen::MatrixXd mixed_partials(const BivariateFunction& f, const Eigen::VectorXd& p,
                               const Eigen::VectorXd& q, const std::array<Arg, 2>& pattern,
                               const FDConfig& cfg);

/// All third-order partials for a pattern, entry (i, j, k).
Tensor3 mixed_partials(const BivariateFunction& f, const Eigen::VectorXd& p,
                       const Eigen::VectorXd& q, const std::array<Arg, 3>& pattern,
                       const FDConfig& cfg);

}  // namespace canodiv::numkit
