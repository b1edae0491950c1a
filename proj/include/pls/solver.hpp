#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pls/square.hpp"

namespace pls {

enum class Verdict { completable, non_completable };

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// A completable verdict always carries a witness that extends the query; a
// non-completable verdict is only issued after exhausting the search space.
struct CompletionCertificate {
  Verdict verdict = Verdict::non_completable;
  std::optional<PartialLatinSquare> witness;
  SearchStats stats;

  bool completable() const { return verdict == Verdict::completable; }
};

struct CellConstraint {
  enum class Kind { forced, forbidden };

  Cell cell;
  Kind kind = Kind::forced;
  std::vector<int> symbols;  // one symbol when forced

  static CellConstraint force(Cell cell, int symbol) { return {cell, Kind::forced, {symbol}}; }
  static CellConstraint forbid(Cell cell, std::vector<int> symbols) {
    return {cell, Kind::forbidden, std::move(symbols)};
  }
};

// Node budget for a single query; exceeding it raises BudgetExceeded rather
// than producing a verdict. The default honours PLS_BUDGET_NODES.
struct SolverOptions {
  std::uint64_t node_budget = default_node_budget();

  static std::uint64_t default_node_budget();
};

// Exact decision by backtracking over bitmask candidate sets. Each node
// branches on the most constrained open choice among empty cells, (row,
// symbol) pairs and (column, symbol) pairs; ties go to cells, then rows, then
// columns, each in row-major order, and candidates are tried lowest first.
CompletionCertificate is_completable(const PartialLatinSquare& p, const SolverOptions& options = {});

// Number of completions, counting stops at `cap`.
std::uint64_t count_completions(const PartialLatinSquare& p, std::uint64_t cap,
                                const SolverOptions& options = {});

// Completion honouring extra forced / forbidden cells. Throws
// InconsistentConstraints when the constraints contradict each other or a
// filled cell of P.
CompletionCertificate complete_with_constraints(const PartialLatinSquare& p,
                                                std::span<const CellConstraint> constraints,
                                                const SolverOptions& options = {});

}  // namespace pls
