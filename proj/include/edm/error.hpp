#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edm {

enum class ErrorCode {
  InvalidArgument,
  InvalidFrame,
  FrameMismatch,
  EmptySetMass,
  MagnitudeExceeded,
  SumNotOne,
  DuplicateSubset,
  EmptySetInBasis,
  Duplicate,
  InvalidCbba,
  NegativeNumerator,
  NotReal,
  ParseError,
  UnknownElement,
  FrameTooLarge,
  GenerationFailed,
};

// Upper-case wire name, e.g. "SUM_NOT_ONE".
std::string_view to_string(ErrorCode code) noexcept;

class EvidenceError : public std::runtime_error {
 public:
  EvidenceError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace edm
