#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pls/cycle_type.hpp"
#include "pls/square.hpp"
#include "pls/transform.hpp"

namespace pls {

// C_target o_position C_source: column `target` with its entry in row
// `position` replaced by P(position, source). Row compositions are the same
// thing on the transpose, so R_target o_position R_source replaces the entry
// in column `position` by P(source, position).
struct LineComposition {
  enum class Kind { row, column };
  Kind kind = Kind::column;
  int target = 0;
  int source = 0;
  int position = 0;
};

struct ComposedLine {
  std::vector<int> cells;  // 1-based positions stored at index pos-1; kEmpty for holes
  bool latin = false;      // no symbol repeated
};

// Requires P in PLS(2,3;n) layout (NotNormalForm). The position must lie in the
// filled band: at most 2 for columns, at most 3 for rows (IndexOutOfRange).
ComposedLine compose(const PartialLatinSquare& p, const LineComposition& c);

// Where a symbol alpha outside the 2x3 corner sits: P(j,1) = P(k,2) =
// P(l,3) = P(1,q) = P(2,r) = alpha.
struct AlphaLines {
  int j = 0, k = 0, l = 0;
  int q = 0, r = 0;
  friend bool operator==(const AlphaLines&, const AlphaLines&) = default;
};

struct Replacements {
  AlphaLines lines;
  std::vector<int> rows;          // i >= 3 replacing alpha
  std::vector<int> columns;       // p >= 4 replacing alpha
  std::vector<int> self_columns;  // those p in {q, r}
};

// Throws NotNormalForm, AlphaInCorner, or IndexOutOfRange for a symbol
// outside [n]. Requires the standard alphabet.
Replacements find_replacements(const PartialLatinSquare& p, int alpha);

// One reduction R(P; R_i, C_p, alpha) together with the isotopy that moves
// row i, column p and symbol alpha to position n (keeping the order of all
// other indices) so the result is the leading (n-1) x (n-1) block.
struct ReductionStep {
  int order = 0;  // of the source square
  int alpha = 0;
  int row = 0;     // i
  int column = 0;  // p
  AlphaLines lines;
  Isotopy normalization;

  bool self_replacing() const { return column == lines.q || column == lines.r; }
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Builds the step for (alpha, i, p) after checking both replace alpha.
// Throws InvalidStep otherwise.
ReductionStep make_step(const PartialLatinSquare& p, int alpha, int row, int column);

// Applies a step. Throws InvalidStep if the step does not match P.
PartialLatinSquare reduce(const PartialLatinSquare& p, const ReductionStep& step);

// Every cycle of the (1,2)-row-permutation has one of the words
// 00, 01, 11, 101, 111, 1010, 1110, 10101, 101010 up to rotation.
// Throws NotNormalForm, OrderTooSmall for n < 8.
bool is_completely_reduced(const PartialLatinSquare& p);

// A reduction whose column replaces alpha and itself: smallest alpha, then
// smallest row, then smallest column. Throws NotNormalForm, OrderTooSmall for
// n < 9.
std::optional<ReductionStep> proper_reduction(const PartialLatinSquare& p);

struct ReductionTrace {
  PartialLatinSquare terminal;
  std::vector<ReductionStep> steps;
};

// Applies proper reductions until the square has order 8 or none is left.
// Throws NotNormalForm, OrderTooSmall for n < 8.
ReductionTrace successive_reduce(const PartialLatinSquare& p);

struct TerminalLabel {
  enum class Kind { order8, a, b, c, d, e, f, g, h };
  Kind kind = Kind::order8;
  int k = 0;  // unused for order8
  friend bool operator==(const TerminalLabel&, const TerminalLabel&) = default;
};

std::string to_string(const TerminalLabel& label);

// Order 8 squares get the order8 label; otherwise the cycle type must be one
// of the families (a)-(h) with k >= 1:
//   (a) {(10,3),(00,k)}             (e) {(111,1),(00,k+2)}
//   (b) {(10,1),(11,1),(00,k+1)}    (f) {(1110,1),(00,k+1)}
//   (c) {(10,1),(101,1),(00,k+1)}   (g) {(10101,1),(00,k+1)}
//   (d) {(10,1),(1010,1),(00,k)}    (h) {(101010,1),(00,k)}
// Throws Unclassifiable.
TerminalLabel classify_terminal(const PartialLatinSquare& p);
TerminalLabel classify_cycle_type(const CycleType& type);

// [{"order":..,"alpha":..,"row":..,"column":..,"j":..,...}, ...]
std::string trace_to_json(const std::vector<ReductionStep>& steps);

}  // namespace pls
