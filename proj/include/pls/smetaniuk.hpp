#pragma once

#include <array>
#include <string>
#include <vector>

#include "pls/diagonal.hpp"
#include "pls/solver.hpp"
#include "pls/square.hpp"

namespace pls {

// Order n+1 lift: entries strictly below the forward diagonal move down one
// row, the diagonal carries a new symbol (one past the largest symbol of P),
// and everything above the diagonal is empty.
PartialLatinSquare t_construct(const PartialLatinSquare& p);

// Order n+2 lift along the augmented forward diagonal D2 of the lifted array.
struct T2Square {
  PartialLatinSquare base;
  PartialLatinSquare lifted;
  DiagonalSpec diagonal;
  // fill[k] in {0, 1} selects new_symbols[fill[k]] for diagonal.cells()[k].
  std::vector<int> fill;
  std::array<int, 2> new_symbols{};
};

// A Latin assignment of the two new symbols to D2 of order m.
std::vector<int> default_diagonal_fill(int m);

// Below D2: lifted(i,j) = base(i-2,j). On D2: the new symbols chosen by
// `fill`. Above D2: empty. Throws InvalidDiagonalFill when `fill` has the
// wrong length, values outside {0,1}, or repeats a symbol in a line.
T2Square t2_construct(const PartialLatinSquare& p, const std::vector<int>& fill);

// A completion of t2.lifted. When the base is a Latin square of odd order
// with {P(1,2), P(1,3)} disjoint from {P(2,4), P(2,5), P(3,4), P(3,5)}, the
// completion also has L(3,4) = P(1,4) and L(3,5) = P(1,5); if in addition
// those four cells of P form an intercalate, cells (1,4), (1,5), (2,4), (2,5)
// of L carry an intercalate on the same two symbols.
//
// Found by exact search with these properties as cell constraints. Throws
// NotCompletable when the base has no completion (checked first, by the same
// search), ObservationUnsatisfiable if the lift search fails.
PartialLatinSquare smetaniuk_complete_t2(const T2Square& t2, const SolverOptions& options = {});

struct ObservationItem {
  enum class Status { pass, fail, not_applicable };
  std::string name;
  Status status = Status::not_applicable;
  std::string detail;
};

struct ObservationReport {
  std::vector<ObservationItem> items;
  bool ok() const;  // no item failed
};

std::string_view to_string(ObservationItem::Status status);

// Checks L against P item by item: "below" (entries below D2 repeat P two
// rows up), "diagonal" (D2 carries only the two symbols of L outside P's
// alphabet), "row3" (the L(3,4), L(3,5) property) and "intercalate".
ObservationReport verify_observations(const PartialLatinSquare& l, const PartialLatinSquare& p,
                                      const DiagonalSpec& diagonal);

}  // namespace pls
