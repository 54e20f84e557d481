#include "syncwalk/error.hpp"

namespace syncwalk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyStateSpace: return "EmptyStateSpace";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::RowSumNotOne: return "RowSumNotOne";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NotAMappingLaw: return "NotAMappingLaw";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoCycleThroughState: return "NoCycleThroughState";
    case ErrorCode::NotErgodic: return "NotErgodic";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DeterministicChain: return "DeterministicChain";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::NotSync: return "NotSync";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::DepthCap: return "DepthCap";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
  }
  return "UnknownError";
}

}  // namespace syncwalk
