#pragma once

#include <stdexcept>
#include <string>

namespace recurseq {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (index too small, zero
/// leading coefficient, malformed text input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Negative companion-matrix power requested with q = 0.
class InverseUnavailable : public Error {
 public:
  using Error::Error;
};

/// A ratio or acceleration formula hit a zero denominator.
class DegenerateRatio : public Error {
 public:
  using Error::Error;
};

/// A root-finding step hit a zero denominator.
class DegenerateStep : public Error {
 public:
  using Error::Error;
};

/// A continued-fraction convergent has a zero denominator.
class DegenerateConvergent : public Error {
 public:
  using Error::Error;
};

/// The quadratic has no pair of distinct real roots.
class NonRealRoots : public Error {
 public:
  using Error::Error;
};

/// An iteration did not reach the requested tolerance within its cap.
class NoProgress : public Error {
 public:
  using Error::Error;
};

/// An index exceeded the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace recurseq
