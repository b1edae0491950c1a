#include "pls/error.hpp"

namespace pls {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::DuplicateInRow: return "DuplicateInRow";
    case ErrorCode::DuplicateInColumn: return "DuplicateInColumn";
    case ErrorCode::SymbolOutOfAlphabet: return "SymbolOutOfAlphabet";
    case ErrorCode::PermutationSizeMismatch: return "PermutationSizeMismatch";
    case ErrorCode::NotAnIntercalate: return "NotAnIntercalate";
    case ErrorCode::RowNotFull: return "RowNotFull";
    case ErrorCode::NotNormalForm: return "NotNormalForm";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalMatchingFailure: return "InternalMatchingFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InconsistentConstraints: return "InconsistentConstraints";
    case ErrorCode::InvalidDiagonalFill: return "InvalidDiagonalFill";
    case ErrorCode::NotCompletable: return "NotCompletable";
    case ErrorCode::ObservationUnsatisfiable: return "ObservationUnsatisfiable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AlphaInCorner: return "AlphaInCorner";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::WrongCycleType: return "WrongCycleType";
    case ErrorCode::PipelineDefect: return "PipelineDefect";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

DuplicateError::DuplicateError(ErrorCode code, int line, int symbol)
    : Error(code, (code == ErrorCode::DuplicateInRow ? "row " : "column ") +
                      std::to_string(line) + " repeats symbol " + std::to_string(symbol)),
      line_(line),
      symbol_(symbol) {}

ParseError::ParseError(int line, int column, const std::string& what)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace pls
