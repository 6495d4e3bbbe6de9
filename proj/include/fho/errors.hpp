#pragma once

#include <stdexcept>
#include <string>

namespace fho {

/// Argument outside the domain of an operation (non-finite time, t outside a
/// frame's range, invalid parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance. Carries the best
/// estimate available at the point of failure.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double partial_value)
      : std::runtime_error(what), partial_value_(partial_value) {}

  double partial_value() const noexcept { return partial_value_; }

 private:
  double partial_value_;
};

/// A wavefunction has non-negligible weight near the edge of its grid.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fho
