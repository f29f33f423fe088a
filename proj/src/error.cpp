#include "singlab/error.hpp"

namespace singlab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::QHofZeroUndefined: return "QHofZeroUndefined";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::BadCoefficients: return "BadCoefficients";
    case ErrorCode::SigmaMismatch: return "SigmaMismatch";
    case ErrorCode::VariableClash: return "VariableClash";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::FieldLacksI: return "FieldLacksI";
    case ErrorCode::WindowExceedsBound: return "WindowExceedsBound";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotQuasiDominant: return "NotQuasiDominant";
    case ErrorCode::NotAugmented: return "NotAugmented";
    case ErrorCode::NotConilpotent: return "NotConilpotent";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace singlab
