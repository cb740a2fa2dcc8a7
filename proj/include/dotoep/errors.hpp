#ifndef DOTOEP_ERRORS_HPP
#define DOTOEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dotoep {

// Requested integration accuracy could not be reached within the
// subdivision budget; carries the achieved error estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& msg, double achieved, double requested)
      : std::runtime_error(msg + " (achieved " + std::to_string(achieved) +
                           ", requested " + std::to_string(requested) + ")"),
        achieved_(achieved),
        requested_(requested) {}

  double achieved() const { return achieved_; }
  double requested() const { return requested_; }

 private:
  double achieved_;
  double requested_;
};

// An iterative eigensolver ran out of its iteration budget; carries the
// best eigenvalue estimate and its residual norm.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double best_estimate, double residual)
      : std::runtime_error(msg + " (best estimate " + std::to_string(best_estimate) +
                           ", residual " + std::to_string(residual) + ")"),
        best_estimate_(best_estimate),
        residual_(residual) {}

  double best_estimate() const { return best_estimate_; }
  double residual() const { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

// Invalid experiment configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dotoep

#endif  // DOTOEP_ERRORS_HPP
