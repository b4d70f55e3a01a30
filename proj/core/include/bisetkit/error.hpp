#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bisetkit {

enum class ErrorKind {
  NotAGroup,
  TooLarge,
  NotNormal,
  GroupMismatch,
  DimensionMismatch,
  PointOutOfRange,
  UniverseOverflow,
  UnknownClass,
  FunctorLawViolation,
  ContractionFailure,
  IsoNotFound,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception type; `kind()`
/// lets front ends map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bisetkit
