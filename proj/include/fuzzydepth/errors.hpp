#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzydepth {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument left its mathematical domain (alpha outside [0,1], r < 1, ...).
struct DomainError : Error {
  using Error::Error;
};

// NaN or infinity where a finite value is required.
struct NonFinite : Error {
  using Error::Error;
};

// Trapezoid coordinates that violate a <= b <= c <= d, or an interval with
// lo > hi.  Carries a 1-based line number when raised by the CSV loader.
struct OrderingViolation : Error {
  explicit OrderingViolation(const std::string& what, std::size_t line = 0)
      : Error(what), line(line) {}
  std::size_t line;
};

// measure_between / contained_everywhere called with lo > hi.
struct EnvelopeInverted : Error {
  using Error::Error;
};

// Convex-combination weights that are negative or do not sum to one.
struct WeightError : Error {
  using Error::Error;
};

// between(A1, A, A2) requires A1 and A2 to be Ramik-Rimanek comparable.
struct NotOrdered : Error {
  using Error::Error;
};

// Depth computations need an expanded sample of size >= 2.
struct SampleTooSmall : Error {
  using Error::Error;
};

// A CDF oracle returned a value outside [0,1].
struct OracleError : Error {
  using Error::Error;
};

// Quadrature grid too coarse for oracle-based population depths.
struct QuadratureError : Error {
  using Error::Error;
};

// Median requested on a sample whose items carry no trapezoid shape.
struct NotTrapezoidal : Error {
  using Error::Error;
};

// Invalid simulation configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed CSV input.  line is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line(line) {}
  std::size_t line;
};

// A dataset with a header but no rows.
struct EmptyDataset : Error {
  using Error::Error;
};

// Filesystem-level failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace fuzzydepth
