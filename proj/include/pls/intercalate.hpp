#pragma once

#include <optional>
#include <vector>

#include "pls/square.hpp"

namespace pls {

// Cells (r1,c1),(r2,c2) carry s1 and (r1,c2),(r2,c1) carry s2.
struct Intercalate {
  int r1 = 0, r2 = 0;
  int c1 = 0, c2 = 0;
  int s1 = 0, s2 = 0;
  friend bool operator==(const Intercalate&, const Intercalate&) = default;
};

bool is_intercalate(const PartialLatinSquare& p, const Intercalate& ic);

// Intercalate on the four given cells, if the current contents form one.
std::optional<Intercalate> intercalate_at(const PartialLatinSquare& p, int r1, int r2, int c1,
                                          int c2);

// Every intercalate among filled cells, reported once with r1 < r2, c1 < c2.
std::vector<Intercalate> find_intercalates(const PartialLatinSquare& p);

// Exchanges s1 and s2 on the four cells. Throws NotAnIntercalate.
PartialLatinSquare swap_intercalate(const PartialLatinSquare& p, const Intercalate& ic);

}  // namespace pls
