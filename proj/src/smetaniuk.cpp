#include "pls/smetaniuk.hpp"

#include <algorithm>

#include "pls/error.hpp"
#include "pls/intercalate.hpp"

namespace pls {

namespace {

std::vector<int> extended_alphabet(const PartialLatinSquare& p, int extra) {
  std::vector<int> alphabet = p.alphabet();
  const int top = alphabet.empty() ? 0 : alphabet.back();
  for (int k = 1; k <= extra; ++k) alphabet.push_back(top + k);
  return alphabet;
}

bool is_full_latin(const PartialLatinSquare& p) { return p.is_complete(); }

// Hypotheses of the row-3 property, on a Latin square of odd order >= 5.
bool row3_applies(const PartialLatinSquare& p) {
  if (!is_full_latin(p) || p.order() % 2 == 0 || p.order() < 5) return false;
  for (int s : {p.at(1, 2), p.at(1, 3)}) {
    for (int t : {p.at(2, 4), p.at(2, 5), p.at(3, 4), p.at(3, 5)}) {
      if (s == t) return false;
    }
  }
  return true;
}

bool base_intercalate(const PartialLatinSquare& p) { return intercalate_at(p, 2, 3, 4, 5).has_value(); }

}  // namespace

PartialLatinSquare t_construct(const PartialLatinSquare& p) {
  const int n = p.order();
  const auto alphabet = extended_alphabet(p, 1);
  Grid g(n + 1, alphabet);
  for (const Triple& t : p.triples()) {
    if (t.col < t.row) g.at(t.row + 1, t.col) = t.symbol;
  }
  for (int i = 1; i <= n + 1; ++i) g.at(i, i) = alphabet.back();
  return validate(std::move(g));
}

std::vector<int> default_diagonal_fill(int m) {
  const DiagonalSpec d = diagonal(DiagonalKind::augmented_forward, m);
  std::vector<int> fill;
  for (const Cell& cell : d.cells()) {
    if (m % 2 == 1 && cell.row <= 3) {
      // (1,1) and (3,3) share a symbol, (2,1) and (3,2) the other.
      fill.push_back(cell.row == 1 || cell.col == 3 ? 0 : 1);
    } else {
      fill.push_back((cell.row + cell.col) % 2);
    }
  }
  return fill;
}

T2Square t2_construct(const PartialLatinSquare& p, const std::vector<int>& fill) {
  const int n = p.order();
  DiagonalSpec d = diagonal(DiagonalKind::augmented_forward, n + 2);
  if (fill.size() != d.cells().size()) {
    throw Error(ErrorCode::InvalidDiagonalFill, "expected " + std::to_string(d.cells().size()) +
                                                    " diagonal entries, got " + std::to_string(fill.size()));
  }
  const auto alphabet = extended_alphabet(p, 2);
  const std::array<int, 2> fresh{alphabet[static_cast<std::size_t>(n)], alphabet[static_cast<std::size_t>(n + 1)]};
  Grid g(n + 2, alphabet);
  for (std::size_t k = 0; k < fill.size(); ++k) {
    if (fill[k] != 0 && fill[k] != 1) throw Error(ErrorCode::InvalidDiagonalFill, "fill values must be 0 or 1");
    g.at(d.cells()[k].row, d.cells()[k].col) = fresh[static_cast<std::size_t>(fill[k])];
  }
  for (int i = 3; i <= n + 2; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (d.below({i, j}) && p.filled(i - 2, j)) g.at(i, j) = p.at(i - 2, j);
    }
  }
  PartialLatinSquare lifted;
  try {
    lifted = validate(std::move(g));
  } catch (const DuplicateError& e) {
    throw Error(ErrorCode::InvalidDiagonalFill, e.what());
  }
  return {p, std::move(lifted), std::move(d), fill, fresh};
}

PartialLatinSquare smetaniuk_complete_t2(const T2Square& t2, const SolverOptions& options) {
  const PartialLatinSquare& p = t2.base;
  if (!is_completable(p, options).completable()) {
    throw Error(ErrorCode::NotCompletable, "base square has no completion");
  }
  std::vector<CellConstraint> constraints;
  if (row3_applies(p)) {
    constraints.push_back(CellConstraint::force({3, 4}, p.at(1, 4)));
    constraints.push_back(CellConstraint::force({3, 5}, p.at(1, 5)));
    if (base_intercalate(p)) {
      const int a = p.at(2, 4), b = p.at(2, 5);
      std::vector<int> others;
      for (int s : t2.lifted.alphabet())
        if (s != a && s != b) others.push_back(s);
      for (Cell cell : {Cell{1, 4}, Cell{1, 5}, Cell{2, 4}, Cell{2, 5}}) {
        constraints.push_back(CellConstraint::forbid(cell, others));
      }
    }
  }
  CompletionCertificate cert = complete_with_constraints(t2.lifted, constraints, options);
  if (cert.completable()) return *cert.witness;
  throw Error(ErrorCode::ObservationUnsatisfiable,
              "no completion of the lift with the required properties for base\n" + to_string(p));
}

bool ObservationReport::ok() const {
  return std::none_of(items.begin(), items.end(),
                      [](const ObservationItem& i) { return i.status == ObservationItem::Status::fail; });
}

std::string_view to_string(ObservationItem::Status status) {
  switch (status) {
    case ObservationItem::Status::pass:
      return "pass";
    case ObservationItem::Status::fail:
      return "fail";
    case ObservationItem::Status::not_applicable:
      return "not applicable";
  }
  return "?";
}

ObservationReport verify_observations(const PartialLatinSquare& l, const PartialLatinSquare& p,
                                      const DiagonalSpec& d) {
  using Status = ObservationItem::Status;
  ObservationReport report;
  const int n = p.order();
  const bool shape_ok = l.order() == n + 2 && d.order() == n + 2 && l.is_complete();

  ObservationItem below{"below", Status::pass, ""};
  if (!shape_ok) {
    below = {"below", Status::fail, "L is not a Latin square of order n+2"};
  } else {
    for (int i = 3; i <= n + 2 && below.status == Status::pass; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (d.below({i, j}) && p.filled(i - 2, j) && l.at(i, j) != p.at(i - 2, j)) {
          below = {"below", Status::fail,
                   "L(" + std::to_string(i) + "," + std::to_string(j) + ") differs from P(" + std::to_string(i - 2) +
                       "," + std::to_string(j) + ")"};
          break;
        }
      }
    }
  }
  report.items.push_back(below);

  ObservationItem diag{"diagonal", Status::pass, ""};
  if (!shape_ok) {
    diag = {"diagonal", Status::fail, "L is not a Latin square of order n+2"};
  } else {
    std::vector<int> fresh;
    for (int s : l.alphabet())
      if (p.rank_of(s) < 0) fresh.push_back(s);
    for (const Cell& cell : d.cells()) {
      const int s = l.at(cell.row, cell.col);
      if (std::find(fresh.begin(), fresh.end(), s) == fresh.end()) {
        diag = {"diagonal", Status::fail,
                "D2 cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ") holds " +
                    std::to_string(s)};
        break;
      }
    }
  }
  report.items.push_back(diag);

  ObservationItem row3{"row3", Status::not_applicable, "hypothesis does not hold"};
  ObservationItem inter{"intercalate", Status::not_applicable, "hypothesis does not hold"};
  if (row3_applies(p) && shape_ok) {
    const bool good = l.at(3, 4) == p.at(1, 4) && l.at(3, 5) == p.at(1, 5);
    row3 = {"row3", good ? Status::pass : Status::fail, good ? "" : "L(3,4), L(3,5) differ from P(1,4), P(1,5)"};
    if (base_intercalate(p)) {
      const auto found = intercalate_at(l, 1, 2, 4, 5);
      std::vector<int> want{p.at(2, 4), p.at(2, 5)};
      std::sort(want.begin(), want.end());
      bool same = false;
      if (found) {
        std::vector<int> got{found->s1, found->s2};
        std::sort(got.begin(), got.end());
        same = got == want;
      }
      inter = {"intercalate", same ? Status::pass : Status::fail,
               same ? "" : "cells (1,4),(1,5),(2,4),(2,5) of L are not an intercalate on the same symbols"};
    }
  }
  report.items.push_back(row3);
  report.items.push_back(inter);
  return report;
}

}  // namespace pls
