#ifndef POLYCON_ERROR_HPP
#define POLYCON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polycon {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: n < 2, R <= 0, parameter out of its domain, too-coarse resolution.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A method was requested for an input it does not cover (e.g. closed form at an unsupported n).
class UnsupportedMethodError : public Error {
public:
  using Error::Error;
};

/// Numerical routine failed to reach its tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Geometry assembly failed (seam gap, broken topology).
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Input object violates a structural precondition (non-watertight mesh, empty template...).
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// Planar layout produced overlapping patches.
class LayoutError : public Error {
public:
  using Error::Error;
};

/// Fitted model does not describe the data within tolerance.
class ModelMismatchError : public Error {
public:
  using Error::Error;
};

/// File could not be written or read.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace polycon

#endif  // POLYCON_ERROR_HPP
