#ifndef PMNET_ERROR_HPP_
#define PMNET_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmnet {

enum class ErrorCode {
  // distributions
  NotNormalized,
  OutOfRangeState,
  NonPositiveEntry,
  DuplicateAssignment,
  EmptySubset,
  IndexOutOfScope,
  ScopeMismatch,
  SupportViolation,
  OverlappingSets,
  EmptyABSet,
  // cluster trees
  NotATree,
  ClusterSubsumed,
  RIPViolation,
  NotNormalizedResult,
  // discovery
  ScopeTooSmall,
  BadPair,
  NumericalIntegrity,
  // graphs
  UnknownVertex,
  UnknownFormat,
  // generators, io and cli
  ConfigInvalid,
  ParseError,
  InvalidArgument,
  CheckFailed,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. The message names
// the offending cell, set or line where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

  // 2 for numerical-integrity failures, 1 for everything else.
  int exit_code() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace pmnet

#endif  // PMNET_ERROR_HPP_
