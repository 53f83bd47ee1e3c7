#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlab {

/// Failure categories surfaced by the library. The CLI maps `InvalidInput`
/// style kinds to exit code 2 and `InvariantFailure` to exit code 3.
enum class ErrorKind {
  NotUnitModulus,
  DegenerateScalar,
  DegenerateInput,
  DimensionMismatch,
  NotAnIdeal,
  JacobiViolation,
  AntisymmetryViolation,
  InvalidComponent,
  UnknownComponent,
  InvalidSpec,
  SpecMismatch,
  ParseError,
  InvariantFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dlab
