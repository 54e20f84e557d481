#pragma once

#include <stdexcept>
#include <string>

namespace syncwalk {

enum class ErrorCode {
  // input validation
  ParseError,
  EmptyStateSpace,
  DuplicateLabel,
  NegativeEntry,
  RowSumNotOne,
  SizeMismatch,
  InvalidMatrix,
  NotAMappingLaw,
  InvalidColoring,
  InvalidGraph,
  // domain preconditions
  NotIrreducible,
  NoCycleThroughState,
  NotErgodic,
  NotPrimitive,
  DeterministicChain,
  TargetOutOfRange,
  // sync precondition
  NotSync,
  // resource caps
  SupportTooLarge,
  SearchSpaceTooLarge,
  StateSpaceTooLarge,
  DepthCap,
  ToleranceNotReached,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syncwalk
