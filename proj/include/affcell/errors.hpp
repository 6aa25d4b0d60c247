#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace affcell {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonDominant : public Error {
public:
  using Error::Error;
};

class TypeMismatch : public Error {
public:
  using Error::Error;
};

class BasisMismatch : public Error {
public:
  using Error::Error;
};

/// A computation needed an element outside the enumerated length ball.
/// `required_bound()` is the smallest ball radius that would have held the
/// offending element, when it is known.
class BoundExceeded : public Error {
public:
  BoundExceeded(const std::string& what, std::optional<int> required)
      : Error(what), required_(required) {}
  std::optional<int> required_bound() const { return required_; }

private:
  std::optional<int> required_;
};

class InexactAValue : public Error {
public:
  using Error::Error;
};

class ClosureViolation : public Error {
public:
  using Error::Error;
};

class IdealViolation : public Error {
public:
  using Error::Error;
};

class NoBijection : public Error {
public:
  using Error::Error;
};

class CacheFormatError : public Error {
public:
  using Error::Error;
};

} // namespace affcell
