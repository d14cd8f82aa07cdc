#include "sysrep/error.hpp"

namespace sysrep {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::RationalFieldUnsupported: return "RationalFieldUnsupported";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NegativeTimeForSemigroup: return "NegativeTimeForSemigroup";
    case ErrorCode::WrongTimeGroup: return "WrongTimeGroup";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::ExtensionTooLarge: return "ExtensionTooLarge";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_guard_violation(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeTooLarge:
    case ErrorCode::StateSpaceTooLarge:
    case ErrorCode::ExtensionTooLarge:
    case ErrorCode::DimensionTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace sysrep
