#include "pls/square.hpp"

#include <algorithm>
#include <sstream>

#include "pls/error.hpp"

namespace pls {

std::vector<int> standard_alphabet(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

Grid::Grid(int order) : Grid(order, standard_alphabet(order)) {}

Grid::Grid(int order, std::vector<int> symbols)
    : n(order),
      cells(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), kEmpty),
      alphabet(std::move(symbols)) {}

PartialLatinSquare validate(Grid g) {
  if (g.n < 1) throw Error(ErrorCode::BadShape, "order must be positive");
  const auto nn = static_cast<std::size_t>(g.n);
  if (g.cells.size() != nn * nn) throw Error(ErrorCode::BadShape, "cell count is not n*n");
  if (g.alphabet.size() != nn) throw Error(ErrorCode::BadShape, "alphabet size differs from order");
  if (!std::is_sorted(g.alphabet.begin(), g.alphabet.end()) ||
      std::adjacent_find(g.alphabet.begin(), g.alphabet.end()) != g.alphabet.end() ||
      g.alphabet.front() <= 0) {
    throw Error(ErrorCode::BadShape, "alphabet must be strictly increasing positive integers");
  }

  PartialLatinSquare p;
  p.grid_ = std::move(g);
  const int n = p.order();
  std::vector<char> seen(nn);
  for (int r = 1; r <= n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 1; c <= n; ++c) {
      const int s = p.at(r, c);
      if (s == kEmpty) continue;
      const int k = p.rank_of(s);
      if (k < 0) {
        throw Error(ErrorCode::SymbolOutOfAlphabet,
                    "symbol " + std::to_string(s) + " at (" + std::to_string(r) + "," +
                        std::to_string(c) + ")");
      }
      if (seen[static_cast<std::size_t>(k)]) throw DuplicateError(ErrorCode::DuplicateInRow, r, s);
      seen[static_cast<std::size_t>(k)] = 1;
    }
  }
  for (int c = 1; c <= n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 1; r <= n; ++r) {
      const int s = p.at(r, c);
      if (s == kEmpty) continue;
      const auto k = static_cast<std::size_t>(p.rank_of(s));
      if (seen[k]) throw DuplicateError(ErrorCode::DuplicateInColumn, c, s);
      seen[k] = 1;
    }
  }
  return p;
}

PartialLatinSquare PartialLatinSquare::empty(int order) { return validate(Grid(order)); }

PartialLatinSquare PartialLatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::BadShape, "no rows");
  Grid g(n);
  for (int r = 1; r <= n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::BadShape, "row " + std::to_string(r) + " has wrong length");
    }
    for (int c = 1; c <= n; ++c) g.at(r, c) = row[static_cast<std::size_t>(c - 1)];
  }
  return validate(std::move(g));
}

PartialLatinSquare PartialLatinSquare::from_triples(int order, std::span<const Triple> triples) {
  Grid g(order);
  for (const Triple& t : triples) {
    if (t.row < 1 || t.row > order || t.col < 1 || t.col > order) {
      throw Error(ErrorCode::BadShape, "triple outside the array");
    }
    if (g.at(t.row, t.col) != kEmpty) throw Error(ErrorCode::BadShape, "cell given twice");
    g.at(t.row, t.col) = t.symbol;
  }
  return validate(std::move(g));
}

bool PartialLatinSquare::has_standard_alphabet() const {
  return alphabet().front() == 1 && alphabet().back() == order();
}

int PartialLatinSquare::rank_of(int symbol) const {
  const auto& a = alphabet();
  if (has_standard_alphabet()) return (symbol >= 1 && symbol <= order()) ? symbol - 1 : -1;
  auto it = std::lower_bound(a.begin(), a.end(), symbol);
  if (it == a.end() || *it != symbol) return -1;
  return static_cast<int>(it - a.begin());
}

std::vector<Triple> PartialLatinSquare::triples() const {
  std::vector<Triple> out;
  for (int r = 1; r <= order(); ++r)
    for (int c = 1; c <= order(); ++c)
      if (filled(r, c)) out.push_back({r, c, at(r, c)});
  return out;
}

int PartialLatinSquare::filled_count() const {
  return static_cast<int>(
      std::count_if(grid_.cells.begin(), grid_.cells.end(), [](int s) { return s != kEmpty; }));
}

int PartialLatinSquare::column_of(int r, int symbol) const {
  for (int c = 1; c <= order(); ++c)
    if (at(r, c) == symbol) return c;
  return 0;
}

int PartialLatinSquare::row_of(int c, int symbol) const {
  for (int r = 1; r <= order(); ++r)
    if (at(r, c) == symbol) return r;
  return 0;
}

bool extends(const PartialLatinSquare& completion, const PartialLatinSquare& partial) {
  if (completion.order() != partial.order() || !completion.is_complete()) return false;
  if (completion.alphabet() != partial.alphabet()) return false;
  for (int r = 1; r <= partial.order(); ++r)
    for (int c = 1; c <= partial.order(); ++c)
      if (partial.filled(r, c) && partial.at(r, c) != completion.at(r, c)) return false;
  return true;
}

bool in_band_form(const PartialLatinSquare& p, int filled_rows, int filled_cols) {
  for (int r = 1; r <= p.order(); ++r)
    for (int c = 1; c <= p.order(); ++c)
      if (p.filled(r, c) != (r <= filled_rows || c <= filled_cols)) return false;
  return true;
}

std::string to_string(const PartialLatinSquare& p) {
  int width = 1;
  for (int s : p.alphabet()) width = std::max(width, static_cast<int>(std::to_string(s).size()));
  std::ostringstream os;
  for (int r = 1; r <= p.order(); ++r) {
    for (int c = 1; c <= p.order(); ++c) {
      std::string token = p.filled(r, c) ? std::to_string(p.at(r, c)) : ".";
      if (c > 1) os << ' ';
      os << std::string(static_cast<std::size_t>(width) - token.size(), ' ') << token;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pls
