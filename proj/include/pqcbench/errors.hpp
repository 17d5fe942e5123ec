#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pqcb {

enum class ErrorCode {
  InvalidArgument,
  Usage,
  UnsupportedVariant,
  BackendFailure,
  CorrectnessViolation,
  EmptySamples,
  UnknownModel,
  Io,
  ClockUnavailable,
  EmptySelection,
  DuplicateRow,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is what
/// crosses the C boundary; the message is the human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pqcb
