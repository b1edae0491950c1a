#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace pls {

inline constexpr int kEmpty = 0;

// 1-based cell position.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Triple {
  int row = 0;
  int col = 0;
  int symbol = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::vector<int> standard_alphabet(int n);

// Mutable, unchecked n x n array. Symbols are positive integers, kEmpty marks
// an empty cell. The alphabet lists the n admissible symbols in increasing
// order; it defaults to [n].
struct Grid {
  int n = 0;
  std::vector<int> cells;
  std::vector<int> alphabet;

  Grid() = default;
  explicit Grid(int order);
  Grid(int order, std::vector<int> symbols);

  int& at(int r, int c) { return cells[index(r, c)]; }
  int at(int r, int c) const { return cells[index(r, c)]; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>((r - 1) * n + (c - 1));
  }
};

// Validated partial Latin square. Immutable once built; edit through grid()
// and validate() again.
class PartialLatinSquare {
 public:
  PartialLatinSquare() = default;

  // Empty square of the given order over [order].
  static PartialLatinSquare empty(int order);
  static PartialLatinSquare from_rows(const std::vector<std::vector<int>>& rows);
  static PartialLatinSquare from_triples(int order, std::span<const Triple> triples);

  int order() const { return grid_.n; }
  int at(int r, int c) const { return grid_.at(r, c); }
  bool filled(int r, int c) const { return grid_.at(r, c) != kEmpty; }
  const std::vector<int>& alphabet() const { return grid_.alphabet; }
  bool has_standard_alphabet() const;
  // 0-based position of `symbol` in the alphabet, or -1.
  int rank_of(int symbol) const;

  const Grid& grid() const { return grid_; }
  std::vector<Triple> triples() const;
  int filled_count() const;
  bool is_complete() const { return filled_count() == order() * order(); }

  // Position of `symbol` in row r (resp. column c), 0 when absent.
  int column_of(int r, int symbol) const;
  int row_of(int c, int symbol) const;

  friend bool operator==(const PartialLatinSquare& a, const PartialLatinSquare& b) {
    return a.grid_.n == b.grid_.n && a.grid_.cells == b.grid_.cells &&
           a.grid_.alphabet == b.grid_.alphabet;
  }

 private:
  friend PartialLatinSquare validate(Grid g);
  Grid grid_;
};

// Checks row/column uniqueness and alphabet membership.
// Throws Error{BadShape, SymbolOutOfAlphabet} or DuplicateError.
PartialLatinSquare validate(Grid g);

// True when L is a full Latin square that agrees with P on every filled cell.
bool extends(const PartialLatinSquare& completion, const PartialLatinSquare& partial);

// PLS(a,b;n) layout: rows 1..a and columns 1..b full, every other cell empty.
bool in_band_form(const PartialLatinSquare& p, int filled_rows, int filled_cols);

std::string to_string(const PartialLatinSquare& p);

}  // namespace pls
