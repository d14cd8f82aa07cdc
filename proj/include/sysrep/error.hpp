#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sysrep {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  NoSquareRoot,
  UnsupportedCharacteristic,
  ZeroPolynomial,
  BothZero,
  DegreeTooLarge,
  NotPeriodic,
  RationalFieldUnsupported,
  DimensionMismatch,
  SingularMatrix,
  NegativeTimeForSemigroup,
  WrongTimeGroup,
  InfiniteOrder,
  UnsupportedGroup,
  ExtensionTooLarge,
  CharacteristicTwo,
  StateSpaceTooLarge,
  DimensionTooLarge,
  ParseError,
  Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

// Guard violations are the ones the CLI maps to exit status 3.
bool is_guard_violation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sysrep
