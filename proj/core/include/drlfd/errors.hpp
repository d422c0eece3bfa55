#pragma once

#include <stdexcept>

namespace drlfd {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain invariant does not hold (non-orthonormal rotation, zero-norm
/// quaternion, ...). The message names the violated invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// On-disk data could not be read or does not match the expected layout.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Tensor/layer size disagreement; the message names the offending layer.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Bad or mutually inconsistent configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or serialization failure, with path context in the message.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace drlfd
