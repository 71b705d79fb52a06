#pragma once

#include <stdexcept>
#include <string>

namespace cybe {

/// Violated precondition or contract in the algebra engines.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or problem file.
class InputError : public Error {
public:
  using Error::Error;
};

/// Exhaustive search would exceed the configured candidate budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace cybe
