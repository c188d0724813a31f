#pragma once

#include <stdexcept>
#include <string>

namespace pyralign {

enum class ErrorCode {
  EmptySequence,
  IllegalSymbol,
  InvalidAlphabet,
  InvalidScores,
  NotNormalized,
  NonPositiveProbability,
  UnnormalizedColumn,
  EmptyInput,
  EmptyIndex,
  UnknownReadId,
  RaggedRows,
  EmptyProfile,
  ZeroProfiles,
  PlanMismatch,
  IoError,
  ParseError,
  DuplicateId,
  EmptyReads,
  InvalidRate,
  ReadTooLong,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message adds the context (position, line, offending id).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pyralign
