#pragma once

#include <stdexcept>
#include <string>

namespace photoem {

// exit code 2
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// exit code 1
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : NumericalError {
  explicit DomainError(const std::string& msg) : NumericalError(msg) {}
};

struct ToleranceError : NumericalError {
  double estimate = 0.0;
  ToleranceError(const std::string& msg, double est)
      : NumericalError(msg + " (error estimate " + std::to_string(est) + ")"),
        estimate(est) {}
};

struct ConvergenceError : NumericalError {
  explicit ConvergenceError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace photoem
