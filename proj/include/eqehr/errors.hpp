#pragma once

#include <stdexcept>
#include <string>

namespace eqehr {

struct PoleAtOne : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonInvertibleGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Group closure exceeded the element cap (also raised for infinite-order generators).
struct ClosureExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotFullDimensional : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotASimplex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotLattice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two computations that must agree did not; carries both sides in the message.
struct InternalMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// A sample held out from an interpolation disagreed with the fitted function.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eqehr
