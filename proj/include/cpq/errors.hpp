#ifndef CPQ_ERRORS_HPP
#define CPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpq {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A ratio that was expected to reduce to a Laurent polynomial did not.
struct ExactDivisionFailure : Error {
  using Error::Error;
};

// Denominator vanishes at the requested sample point.
struct PoleAtSample : Error {
  using Error::Error;
};

// Rational evaluation hit an odd power of q^(1/2).
struct HalfPowerEval : Error {
  using Error::Error;
};

struct DegreeCapExceeded : Error {
  using Error::Error;
};

struct EmptySector : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct TruncationTooSmall : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

// Two supposedly equivalent evaluation pipelines disagreed.
struct InternalMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace cpq

#endif
