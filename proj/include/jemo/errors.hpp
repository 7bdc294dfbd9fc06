#pragma once

#include <stdexcept>
#include <string>

namespace jemo {

// Base class for all library errors. CLI maps these to exit code 2 unless a
// command decides the error is a mathematical violation (exit 1).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct NotCommuting : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct UnknownEnsemble : Error {
  using Error::Error;
};
struct DependentPair : Error {
  using Error::Error;
};
struct EmptyTensor : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct AmbiguousMatch : Error {
  using Error::Error;
};
struct DegenerateModel : Error {
  using Error::Error;
};
struct LambdaOutOfRange : Error {
  using Error::Error;
};
struct ZeroMatrix : Error {
  using Error::Error;
};
struct ConvergenceFailure : Error {
  using Error::Error;
};

}  // namespace jemo
