#include "edm/error.hpp"

namespace edm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidFrame: return "INVALID_FRAME";
    case ErrorCode::FrameMismatch: return "FRAME_MISMATCH";
    case ErrorCode::EmptySetMass: return "EMPTY_SET_MASS";
    case ErrorCode::MagnitudeExceeded: return "MAGNITUDE_EXCEEDED";
    case ErrorCode::SumNotOne: return "SUM_NOT_ONE";
    case ErrorCode::DuplicateSubset: return "DUPLICATE_SUBSET";
    case ErrorCode::EmptySetInBasis: return "EMPTY_SET_IN_BASIS";
    case ErrorCode::Duplicate: return "DUPLICATE";
    case ErrorCode::InvalidCbba: return "INVALID_CBBA";
    case ErrorCode::NegativeNumerator: return "NEGATIVE_NUMERATOR";
    case ErrorCode::NotReal: return "NOT_REAL";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnknownElement: return "UNKNOWN_ELEMENT";
    case ErrorCode::FrameTooLarge: return "FRAME_TOO_LARGE";
    case ErrorCode::GenerationFailed: return "GENERATION_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace edm
