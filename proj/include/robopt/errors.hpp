#pragma once

#include <stdexcept>
#include <string>

namespace robopt {

/// Thrown when an algorithm fails numerically (non-convergence, overflow,
/// non-finite statistic). Input validation failures throw std::invalid_argument.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace robopt
