#pragma once

#include <stdexcept>
#include <string>

namespace z2mem {

/// Argument outside the mathematical domain of an operation (site index,
/// chain length, nonpositive temperature, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a documented contract, e.g. a state that is not normalized.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request is well posed but exceeds what is materialized at desk scale
/// (dense spectra above N = 10, explicit stabilizer matrices above N = 12).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative eigensolver exhausted its budget. Carries the best residual seen.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual, long applications)
      : std::runtime_error(what), best_residual_(best_residual), applications_(applications) {}

  double best_residual() const noexcept { return best_residual_; }
  long applications() const noexcept { return applications_; }

 private:
  double best_residual_;
  long applications_;
};

}  // namespace z2mem
