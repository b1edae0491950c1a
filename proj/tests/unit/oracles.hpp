#pragma once

// Naive reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pls/square.hpp"

namespace oracle {

// Plain cell-order backtracking, no propagation.
inline bool fill(std::vector<int>& cells, int n, int idx, std::uint64_t& count, std::uint64_t cap) {
  if (idx == n * n) {
    ++count;
    return count >= cap;
  }
  if (cells[static_cast<std::size_t>(idx)] != 0) return fill(cells, n, idx + 1, count, cap);
  const int r = idx / n, c = idx % n;
  for (int s = 1; s <= n; ++s) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      if (cells[static_cast<std::size_t>(r * n + k)] == s || cells[static_cast<std::size_t>(k * n + c)] == s) ok = false;
    }
    if (!ok) continue;
    cells[static_cast<std::size_t>(idx)] = s;
    const bool stop = fill(cells, n, idx + 1, count, cap);
    cells[static_cast<std::size_t>(idx)] = 0;
    if (stop) return true;
  }
  return false;
}

// Number of completions of a standard-alphabet square, stopping at cap.
inline std::uint64_t count_completions(const pls::PartialLatinSquare& p, std::uint64_t cap = UINT64_MAX) {
  std::vector<int> cells = p.grid().cells;
  std::uint64_t count = 0;
  fill(cells, p.order(), 0, count, cap);
  return count;
}

inline bool completable(const pls::PartialLatinSquare& p) { return count_completions(p, 1) > 0; }

// Random isotope of the cyclic square of order n.
inline std::vector<std::vector<int>> random_isotope_of_cyclic(int n, std::mt19937_64& rng) {
  std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n)), syms(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)] = syms[static_cast<std::size_t>(i)] = i;
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(syms.begin(), syms.end(), rng);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          syms[static_cast<std::size_t>((rows[static_cast<std::size_t>(r)] + cols[static_cast<std::size_t>(c)]) % n)] + 1;
  return out;
}

}  // namespace oracle
