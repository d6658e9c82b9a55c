#ifndef VMR_ERROR_HPP
#define VMR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vmr {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-domain input: bad parameter values, non-finite
/// fields, unparsable tables, out-of-range interpolation, unwritable
/// output paths.  Maps to CLI exit code 1.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computed result violated a model invariant that holds for all valid
/// inputs.  Maps to CLI exit code 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace vmr

#endif  // VMR_ERROR_HPP
