#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

enum class ErrorKind {
  AxiomViolation,
  MaxOrderExceeded,
  NotAnIdeal,
  NotIdempotent,
  NotLocal,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
  UnknownProperty,
  IoError,
};

/// Single exception type for the whole library; `kind` tells callers (and
/// the CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ringlab
