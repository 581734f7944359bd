#pragma once

#include <stdexcept>
#include <string>

namespace mapcount {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically undefined input (double factorial of -4, reversion of a
// series with vanishing linear term, ...).
struct DomainError : Error {
  using Error::Error;
};

// A denominator of a rational step map vanished along an orbit.  The message
// names the denominator so singular orbits can be reported, not just aborted.
struct PoleError : Error {
  using Error::Error;
};

// Numeric continuation left the branch it was following.
struct BranchLostError : Error {
  using Error::Error;
};

// A quadrature or linear solve could not reach the requested precision.
struct PrecisionError : Error {
  using Error::Error;
};

// Work refused because it exceeds a configured resource cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Bad user-facing configuration (CLI/file input).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace mapcount
