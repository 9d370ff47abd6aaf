#pragma once

#include <stdexcept>
#include <string>

namespace pic {

// Computation failed on valid inputs (degenerate data, non-finite
// intermediates). CLI maps these to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Null model cannot be fit on this response (e.g. all-ones Bernoulli).
class DegenerateResponse : public ComputationError {
 public:
  explicit DegenerateResponse(const std::string& msg) : ComputationError(msg) {}
};

// Linear predictor left the link domain. Carries the offending row.
class DomainViolation : public std::invalid_argument {
 public:
  DomainViolation(const std::string& msg, long row)
      : std::invalid_argument(msg + " (row " + std::to_string(row) + ")"), row_(row) {}
  long row() const { return row_; }

 private:
  long row_;
};

}  // namespace pic
