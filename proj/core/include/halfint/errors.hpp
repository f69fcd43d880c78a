#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace halfint {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a numeric budget cannot be met; carries the best value found.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, std::complex<double> best, double error_estimate)
      : std::runtime_error(what), best_(best), error_estimate_(error_estimate) {}

  std::complex<double> best_estimate() const { return best_; }
  double error_estimate() const { return error_estimate_; }

 private:
  std::complex<double> best_;
  double error_estimate_;
};

}  // namespace halfint
