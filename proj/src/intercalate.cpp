#include "pls/intercalate.hpp"

#include "pls/error.hpp"

namespace pls {

bool is_intercalate(const PartialLatinSquare& p, const Intercalate& ic) {
  const int n = p.order();
  auto in_range = [n](int i) { return i >= 1 && i <= n; };
  if (!in_range(ic.r1) || !in_range(ic.r2) || !in_range(ic.c1) || !in_range(ic.c2)) return false;
  if (ic.r1 == ic.r2 || ic.c1 == ic.c2 || ic.s1 == ic.s2) return false;
  if (ic.s1 == kEmpty || ic.s2 == kEmpty) return false;
  return p.at(ic.r1, ic.c1) == ic.s1 && p.at(ic.r2, ic.c2) == ic.s1 &&
         p.at(ic.r1, ic.c2) == ic.s2 && p.at(ic.r2, ic.c1) == ic.s2;
}

std::optional<Intercalate> intercalate_at(const PartialLatinSquare& p, int r1, int r2, int c1,
                                          int c2) {
  Intercalate ic{r1, r2, c1, c2, p.at(r1, c1), p.at(r1, c2)};
  if (is_intercalate(p, ic)) return ic;
  return std::nullopt;
}

std::vector<Intercalate> find_intercalates(const PartialLatinSquare& p) {
  // For r1 < r2 and a column c1, the partner column is where row r1 holds
  // P(r2, c1); that fixes the quadruple, so the scan is cubic.
  std::vector<Intercalate> out;
  const int n = p.order();
  for (int r1 = 1; r1 <= n; ++r1) {
    for (int r2 = r1 + 1; r2 <= n; ++r2) {
      for (int c1 = 1; c1 <= n; ++c1) {
        const int s1 = p.at(r1, c1);
        const int s2 = p.at(r2, c1);
        if (s1 == kEmpty || s2 == kEmpty) continue;
        const int c2 = p.column_of(r1, s2);
        if (c2 <= c1) continue;
        if (p.at(r2, c2) == s1) out.push_back({r1, r2, c1, c2, s1, s2});
      }
    }
  }
  return out;
}

PartialLatinSquare swap_intercalate(const PartialLatinSquare& p, const Intercalate& ic) {
  if (!is_intercalate(p, ic)) throw Error(ErrorCode::NotAnIntercalate, "cells do not match");
  Grid g = p.grid();
  g.at(ic.r1, ic.c1) = ic.s2;
  g.at(ic.r2, ic.c2) = ic.s2;
  g.at(ic.r1, ic.c2) = ic.s1;
  g.at(ic.r2, ic.c1) = ic.s1;
  return validate(std::move(g));
}

}  // namespace pls
