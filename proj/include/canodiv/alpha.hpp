#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace canodiv {

/// The alpha of the alpha-connections, stored in [-1, 1].
///
/// Geodesic operations accept [-1, 1); divergences need the open interval
/// (-1, 1) and the +/-1 limits have their own entropy operations.
class AlphaParam {
 public:
  constexpr AlphaParam() = default;
  explicit AlphaParam(double value) : value_(value) {
    if (!std::isfinite(value) || value < -1.0 || value > 1.0) {
      std::ostringstream msg;
      msg << "alpha must lie in [-1, 1], got " << value;
      throw std::invalid_argument(msg.str());
    }
  }

  constexpr double value() const { return value_; }
  AlphaParam dual() const { return AlphaParam(-value_); }

  /// (1 - alpha) / 2, the exponent of the alpha-embedding.
  constexpr double embedding_exponent() const { return 0.5 * (1.0 - value_); }
  /// (1 + alpha) / 2.
  constexpr double dual_exponent() const { return 0.5 * (1.0 + value_); }

  void require_open(const char* context) const {
    if (!(std::abs(value_) < 1.0)) {
      std::ostringstream msg;
      msg << context << ": alpha must lie in (-1, 1), got " << value_
          << " (use the relative-entropy operations for the limits)";
      throw std::invalid_argument(msg.str());
    }
  }

  void require_geodesic(const char* context) const {
    if (!(value_ < 1.0)) {
      std::ostringstream msg;
      msg << context << ": alpha-geodesics need alpha < 1, got " << value_;
      throw std::invalid_argument(msg.str());
    }
  }

 private:
  double value_ = 0.0;
};

}  // namespace canodiv
