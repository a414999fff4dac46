#include "orbitfusion/error.hpp"

namespace orbitfusion {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::LevelExceeded: return "LevelExceeded";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::NumericalDrift: return "NumericalDrift";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow:
    case ErrorCode::BoundExceeded:
    case ErrorCode::NumericalDrift:
      return false;
    default:
      return true;
  }
}

}  // namespace orbitfusion
