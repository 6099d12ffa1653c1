#pragma once

#include <stdexcept>
#include <string>

namespace canodiv {

/// A value left the domain where a formula is defined (NaN/Inf, log of a
/// non-positive number, ...). Invalid arguments use std::invalid_argument.
class NumericalDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefiniteError : public NumericalDomainError {
 public:
  NotPositiveDefiniteError(const std::string& what, double smallest_eigenvalue)
      : NumericalDomainError(what), smallest_eigenvalue_(smallest_eigenvalue) {}

  double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

/// Raised when an identity that must hold by construction is violated, e.g.
/// a trace of a product of Hermitian operators with a non-negligible
/// imaginary part.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace canodiv
