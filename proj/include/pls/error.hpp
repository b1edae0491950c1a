#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pls {

enum class ErrorCode {
  BadShape,
  DuplicateInRow,
  DuplicateInColumn,
  SymbolOutOfAlphabet,
  PermutationSizeMismatch,
  NotAnIntercalate,
  RowNotFull,
  NotNormalForm,
  OrderTooSmall,
  NoPerfectMatching,
  PreconditionViolated,
  InternalMatchingFailure,
  BudgetExceeded,
  InconsistentConstraints,
  InvalidDiagonalFill,
  NotCompletable,
  ObservationUnsatisfiable,
  IndexOutOfRange,
  AlphaInCorner,
  InvalidStep,
  Unclassifiable,
  WrongCycleType,
  PipelineDefect,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (the CLI in
// particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Duplicate symbol in a line. `line` is the 1-based row or column index.
class DuplicateError : public Error {
 public:
  DuplicateError(ErrorCode code, int line, int symbol);
  int line() const noexcept { return line_; }
  int symbol() const noexcept { return symbol_; }

 private:
  int line_;
  int symbol_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pls
