#include "pls/diagonal.hpp"

#include "pls/error.hpp"

namespace pls {

DiagonalSpec::DiagonalSpec(DiagonalKind kind, int order)
    : kind_(kind),
      order_(order),
      member_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0),
      leading_(static_cast<std::size_t>(order), order + 1) {
  auto add = [this](int r, int c) { member_[static_cast<std::size_t>((r - 1) * order_ + c - 1)] = 1; };
  auto add_block = [&](int i) {
    add(i, i);
    add(i, i + 1);
    add(i + 1, i);
    add(i + 1, i + 1);
  };
  if (kind == DiagonalKind::forward) {
    for (int i = 1; i <= order; ++i) add(i, i);
  } else if (order % 2 == 0) {
    for (int i = 1; i < order; i += 2) add_block(i);
  } else {
    add(1, 1);
    add(2, 1);
    add(3, 2);
    add(3, 3);
    for (int i = 4; i < order; i += 2) add_block(i);
  }
  for (int r = 1; r <= order; ++r) {
    for (int c = 1; c <= order; ++c) {
      if (!contains({r, c})) continue;
      cells_.push_back({r, c});
      if (leading_[static_cast<std::size_t>(r - 1)] > order) leading_[static_cast<std::size_t>(r - 1)] = c;
    }
  }
}

bool DiagonalSpec::contains(Cell cell) const {
  return member_[static_cast<std::size_t>((cell.row - 1) * order_ + cell.col - 1)] != 0;
}

bool DiagonalSpec::below(Cell cell) const { return cell.col < leading_column(cell.row); }

bool DiagonalSpec::above(Cell cell) const { return !contains(cell) && !below(cell); }

DiagonalSpec diagonal(DiagonalKind kind, int n) {
  const int minimum = kind == DiagonalKind::forward ? 3 : 5;
  if (n < minimum) {
    throw Error(ErrorCode::OrderTooSmall,
                "diagonal needs order >= " + std::to_string(minimum) + ", got " + std::to_string(n));
  }
  return DiagonalSpec(kind, n);
}

}  // namespace pls
