#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maniplex {

enum class ErrorCode {
  kNotInvolution = 1,
  kFixedPoint,
  kMultiEdge,
  kOutOfRange,
  kSizeMismatch,
  kDisconnected,
  kBadTwoFactor,
  kRankOutOfRange,
  kPathUsesPivotColour,
  kNotAChain,
  kNotComparable,
  kNotAPolytope,
  kRankTooLargeForExhaustive,
  kInconsistentVerdicts,
  kBadParam,
  kDegenerateBasis,
  kBudgetExhausted,
  kRankMismatch,
  kParseError,
  kIoError,
  kInternal,
  kNotAProduct,
};

const char* to_string(ErrorCode code) noexcept;

/// Optional data naming where an invariant broke. Unused fields stay at -1.
struct ErrorWitness {
  int colour = -1;
  int other_colour = -1;
  std::int64_t flag = -1;
  std::int64_t other_flag = -1;
  std::int64_t line = -1;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, ErrorWitness witness = {});

  ErrorCode code() const noexcept { return code_; }
  const ErrorWitness& witness() const noexcept { return witness_; }
  /// For parse errors, the code of the validation error that caused it.
  ErrorCode cause() const noexcept { return cause_; }
  void set_cause(ErrorCode cause) noexcept { cause_ = cause; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
  ErrorWitness witness_;
};

}  // namespace maniplex
