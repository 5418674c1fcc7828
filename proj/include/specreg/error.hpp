#pragma once

#include <stdexcept>
#include <string>

namespace specreg {

/// Precondition violated by the caller (bad parameter, α outside the family domain, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A filter or index function produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A source element is identically zero; saturation sets exclude 0.
class DegenerateSource : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver hit its iteration cap or a computed invariant did not hold.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the range where an inverse map is defined.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Not enough usable samples for a fit.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specreg
