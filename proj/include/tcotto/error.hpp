#pragma once

#include <stdexcept>
#include <string>

namespace tcotto {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. a non-symmetric input).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A parameter lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// The result would overflow double precision.
class RangeError : public Error {
public:
  using Error::Error;
};

// A matrix expected to be positive semidefinite has a genuinely negative eigenvalue.
class NotPsdError : public Error {
public:
  NotPsdError(const std::string &what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

private:
  double eigenvalue_;
};

// Objects combined under mismatched conventions (e.g. basis ordering).
class ContractError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace tcotto
