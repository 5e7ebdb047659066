#pragma once

#include <stdexcept>
#include <string>

namespace regraph {

// Precondition violated by the caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration budget, retry cap, or size cap exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer result does not fit the representation.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Numerical routine failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace regraph
