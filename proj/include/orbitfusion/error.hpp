#pragma once

#include <stdexcept>
#include <string>

namespace orbitfusion {

enum class ErrorCode {
  InvalidParams,
  ArityMismatch,
  SumMismatch,
  EntryOutOfRange,
  Overflow,
  BoundExceeded,
  ParamsMismatch,
  LevelExceeded,
  RangeError,
  NumericalDrift,
};

const char* to_string(ErrorCode code);

// Validation errors are caller mistakes; the rest are resource or numeric failures.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbitfusion
