#pragma once

#include <string_view>
#include <vector>

#include "pls/square.hpp"

namespace pls {

enum class DiagonalKind { forward, augmented_forward };

// Cell set of a (possibly augmented) forward diagonal of an order-n array.
//
// forward:            (i,i) for i in [n].
// augmented, n even:  2x2 blocks {i,i+1}^2 for i = 1,3,...,n-1.
// augmented, n odd:   head {(1,1),(2,1),(3,2),(3,3)} plus the 2x2 blocks
//                     {i,i+1}^2 for i = 4,6,...,n-1.
//
// A cell off the diagonal lies below it when it sits left of the first
// diagonal cell of its row, and above it otherwise.
class DiagonalSpec {
 public:
  DiagonalSpec(DiagonalKind kind, int order);

  DiagonalKind kind() const { return kind_; }
  int order() const { return order_; }
  // Row-major.
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(Cell cell) const;
  bool below(Cell cell) const;
  bool above(Cell cell) const;
  // Column of the first diagonal cell in row r.
  int leading_column(int r) const { return leading_[static_cast<std::size_t>(r - 1)]; }

 private:
  DiagonalKind kind_;
  int order_;
  std::vector<Cell> cells_;
  std::vector<char> member_;
  std::vector<int> leading_;
};

// Throws OrderTooSmall for n < 3 (forward) or n < 5 (augmented).
DiagonalSpec diagonal(DiagonalKind kind, int n);

}  // namespace pls
