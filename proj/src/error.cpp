#include "pmnet/error.hpp"

namespace pmnet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OutOfRangeState: return "OutOfRangeState";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::IndexOutOfScope: return "IndexOutOfScope";
    case ErrorCode::ScopeMismatch: return "ScopeMismatch";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::EmptyABSet: return "EmptyABSet";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ClusterSubsumed: return "ClusterSubsumed";
    case ErrorCode::RIPViolation: return "RIPViolation";
    case ErrorCode::NotNormalizedResult: return "NotNormalizedResult";
    case ErrorCode::ScopeTooSmall: return "ScopeTooSmall";
    case ErrorCode::BadPair: return "BadPair";
    case ErrorCode::NumericalIntegrity: return "NumericalIntegrity";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

int Error::exit_code() const noexcept {
  return code_ == ErrorCode::NumericalIntegrity ? 2 : 1;
}

}  // namespace pmnet
