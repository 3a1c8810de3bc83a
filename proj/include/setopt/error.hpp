#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setopt {

enum class ErrorCode {
  EmptyDescription,
  NotPointed,
  NotInterior,
  DimensionMismatch,
  NotSimplicial,
  BracketFailure,
  NotInDualCone,
  NotSingleValued,
  OutsideDomain,
  EmptyWeakMinimalSet,
  InvalidArgument,
  ParseError,
  ValidationError,
  BadParams,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDescription: return "EmptyDescription";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NotInDualCone: return "NotInDualCone";
    case ErrorCode::NotSingleValued: return "NotSingleValued";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::EmptyWeakMinimalSet: return "EmptyWeakMinimalSet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message is prefixed with the
/// code name so that CLI output and logs stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace setopt
