#pragma once

#include <stdexcept>
#include <string>

namespace steintile {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed literals, violated preconditions, mismatched groups.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or search cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace steintile
