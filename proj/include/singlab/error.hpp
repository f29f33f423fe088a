#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singlab {

/// Stable error identifiers shared by the library and the command-line front end.
enum class ErrorCode {
  FieldMismatch,
  RingMismatch,
  ParseError,
  InvalidInput,
  NotInMaximalIdeal,
  CharTooSmall,
  QHofZeroUndefined,
  NotInIdeal,
  DegreeMismatch,
  NotHomogeneous,
  BadCoefficients,
  SigmaMismatch,
  VariableClash,
  NotQuadratic,
  FieldLacksI,
  WindowExceedsBound,
  NotIdempotent,
  NotQuasiDominant,
  NotAugmented,
  NotConilpotent,
};

std::string_view error_name(ErrorCode code);

/// Exception type thrown by every module; carries a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace singlab
