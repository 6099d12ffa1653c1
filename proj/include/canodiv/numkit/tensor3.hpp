#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

namespace canodiv::numkit {

/// Dense n x n x n array of doubles, row-major in (a, b, c).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Eigen::Index n) : n_(n), data_(static_cast<std::size_t>(n * n * n), 0.0) {}

  Eigen::Index dim() const { return n_; }

  double& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    return data_[static_cast<std::size_t>((a * n_ + b) * n_ + c)];
  }
  double operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
    return data_[static_cast<std::size_t>((a * n_ + b) * n_ + c)];
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<double>& data() const { return data_; }

 private:
  Eigen::Index n_ = 0;
  std::vector<double> data_;
};

}  // namespace canodiv::numkit
