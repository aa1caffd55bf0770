#pragma once

#include <stdexcept>
#include <string>

namespace charquant {

enum class ErrorCode {
  InvalidModulus,
  ModulusMismatch,
  VariableMismatch,
  DivisionByZero,
  FlavorMismatch,
  ShapeMismatch,
  CompositionNonzero,
  ArityMismatch,
  IndexOutOfRange,
  CoefficientMismatch,
  TooManyInserts,
  BoundsTooSmall,
  TruncationTooSmall,
  UnsupportedCombination,
  NotNormalized,
};

const char* to_string(ErrorCode code);

/// Thrown by every library operation on contract violation; `code()` names
/// the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace charquant
