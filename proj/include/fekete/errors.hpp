#pragma once

#include <stdexcept>
#include <string>

namespace fekete {

// Precondition violated by the caller.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds a configured size guard.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Exact integer arithmetic would overflow 64 bits.
class ExactArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An iterative method failed to converge or every sample degenerated.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace fekete
