#include "fusionlab/error.hpp"

namespace fusionlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureTooLarge: return "CLOSURE_TOO_LARGE";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::LiftFailure: return "LIFT_FAILURE";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::NonIntegralMultiplicity: return "NON_INTEGRAL_MULTIPLICITY";
    case ErrorCode::AxiomViolation: return "AXIOM_VIOLATION";
    case ErrorCode::NoPositiveEigenvector: return "NO_POSITIVE_EIGENVECTOR";
    case ErrorCode::GradingInconsistent: return "GRADING_INCONSISTENT";
    case ErrorCode::SearchBudgetExceeded: return "SEARCH_BUDGET_EXCEEDED";
    case ErrorCode::NotExactFactorization: return "NOT_EXACT_FACTORIZATION";
    case ErrorCode::GroupLawFailure: return "GROUP_LAW_FAILURE";
    case ErrorCode::SingularCharacterSystem: return "SINGULAR_CHARACTER_SYSTEM";
    case ErrorCode::NotAutomorphism: return "NOT_AUTOMORPHISM";
    case ErrorCode::InvariantFailure: return "INVARIANT_FAILURE";
    case ErrorCode::SingularS: return "SINGULAR_S";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaMismatch: return "SCHEMA_MISMATCH";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace fusionlab
