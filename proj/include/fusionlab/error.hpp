#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionlab {

enum class ErrorCode {
  ClosureTooLarge,
  DivisionByZero,
  LiftFailure,
  LengthMismatch,
  NonIntegralMultiplicity,
  AxiomViolation,
  NoPositiveEigenvector,
  GradingInconsistent,
  SearchBudgetExceeded,
  NotExactFactorization,
  GroupLawFailure,
  SingularCharacterSystem,
  NotAutomorphism,
  InvariantFailure,
  SingularS,
  Unsupported,
  InvalidArgument,
  ParseError,
  SchemaMismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code next to the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fusionlab
