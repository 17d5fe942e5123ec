#include "pqcbench/errors.hpp"

namespace pqcb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Usage: return "UsageError";
    case ErrorCode::UnsupportedVariant: return "UnsupportedVariant";
    case ErrorCode::BackendFailure: return "BackendFailure";
    case ErrorCode::CorrectnessViolation: return "CorrectnessViolation";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::Io: return "IoFailure";
    case ErrorCode::ClockUnavailable: return "ClockUnavailable";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::DuplicateRow: return "DuplicateRow";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pqcb
