#include "maniplex/error.hpp"

namespace maniplex {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotInvolution: return "NotInvolution";
    case ErrorCode::kFixedPoint: return "FixedPoint";
    case ErrorCode::kMultiEdge: return "MultiEdge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBadTwoFactor: return "BadTwoFactor";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kPathUsesPivotColour: return "PathUsesPivotColour";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kNotAPolytope: return "NotAPolytope";
    case ErrorCode::kRankTooLargeForExhaustive: return "RankTooLargeForExhaustive";
    case ErrorCode::kInconsistentVerdicts: return "InconsistentVerdicts";
    case ErrorCode::kBadParam: return "BadParam";
    case ErrorCode::kDegenerateBasis: return "DegenerateBasis";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
    case ErrorCode::kNotAProduct: return "NotAProduct";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, ErrorWitness witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      cause_(code),
      witness_(witness) {}

}  // namespace maniplex
