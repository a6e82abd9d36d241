#pragma once

#include <stdexcept>
#include <string>

namespace galdist {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

// A value fails a constructor's validity requirements.
struct InvalidArgument : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

// Two segments that are not adjacent on their line cannot be concatenated.
struct NotAdjacent : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

// A family whose multiset is not closed under the Galois dual.
struct NotAutodualFamily : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct GenerationFailed : Error {
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.  This always
// indicates a bug in the library, never bad input.
struct InternalCheckFailed : Error {
  using Error::Error;
};

}  // namespace galdist
