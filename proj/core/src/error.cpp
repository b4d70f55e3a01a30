#include "bisetkit/error.hpp"

namespace bisetkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::UniverseOverflow: return "UniverseOverflow";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::FunctorLawViolation: return "FunctorLawViolation";
    case ErrorKind::ContractionFailure: return "ContractionFailure";
    case ErrorKind::IsoNotFound: return "IsoNotFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace bisetkit
