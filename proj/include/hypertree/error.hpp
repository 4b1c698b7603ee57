#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertree {

enum class ErrorCode {
  EmptyEdgeList,
  CycleDetected,
  Disconnected,
  BasepointMissing,
  DuplicateEdge,
  UnknownVertex,
  BasepointNotInTrimmedTree,
  NeedsAugmentation,
  ComplexTooLarge,
  AmbiguousBase,
  MalformedComplex,
  InvalidInput,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdgeList: return "EmptyEdgeList";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BasepointMissing: return "BasepointMissing";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BasepointNotInTrimmedTree: return "BasepointNotInTrimmedTree";
    case ErrorCode::NeedsAugmentation: return "NeedsAugmentation";
    case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorCode::AmbiguousBase: return "AmbiguousBase";
    case ErrorCode::MalformedComplex: return "MalformedComplex";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() identifies
// the failure kind and what() names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypertree
