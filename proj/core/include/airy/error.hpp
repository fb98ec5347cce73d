#pragma once

#include <stdexcept>
#include <string>

namespace airy {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad type, bad rank, p <= h, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but outside what is implemented (odd n, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define AIRY_ENSURE(cond, msg)                                                     \
  do {                                                                             \
    if (!(cond)) throw ::airy::InternalError(std::string(__func__) + ": " + (msg)); \
  } while (0)

}  // namespace airy
