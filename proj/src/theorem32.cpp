#include "pls/theorem32.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pls/cycle_type.hpp"
#include "pls/diagonal.hpp"
#include "pls/error.hpp"
#include "pls/intercalate.hpp"
#include "pls/io.hpp"
#include "pls/matching.hpp"
#include "pls/smetaniuk.hpp"

namespace pls {

namespace {

[[noreturn]] void defect(const std::string& stage, const std::string& what) {
  throw Error(ErrorCode::PipelineDefect, stage + ": " + what);
}

Isotopy lines_only(int n, Permutation rows, Permutation cols) {
  return {std::move(rows), std::move(cols), Permutation::identity(n)};
}

Isotopy symbols_only(Permutation symbols) {
  const int n = symbols.size();
  return {Permutation::identity(n), Permutation::identity(n), std::move(symbols)};
}

// Symbol permutation sending each `from` to its `to`, built from
// transpositions so that every symbol not involved stays put.
Permutation relabeling(int n, std::initializer_list<std::pair<int, int>> moves) {
  Permutation result = Permutation::identity(n);
  for (const auto& [from, to] : moves) {
    const int now = result(from);
    if (now != to) result = Permutation::transposition(n, now, to) * result;
  }
  return result;
}

PartialLatinSquare with_cells(const PartialLatinSquare& p, std::initializer_list<Triple> cells,
                              const std::string& stage) {
  Grid g = p.grid();
  for (const Triple& t : cells) {
    if (g.at(t.row, t.col) != kEmpty) {
      defect(stage, "cell (" + std::to_string(t.row) + "," + std::to_string(t.col) + ") already filled");
    }
    g.at(t.row, t.col) = t.symbol;
  }
  try {
    return validate(std::move(g));
  } catch (const Error& e) {
    defect(stage, e.what());
  }
}

PartialLatinSquare swap_at(const PartialLatinSquare& p, int r1, int r2, int c1, int c2, const std::string& stage) {
  const auto ic = intercalate_at(p, r1, r2, c1, c2);
  if (!ic) {
    defect(stage, "cells (" + std::to_string(r1) + "," + std::to_string(c1) + "), (" + std::to_string(r2) + "," +
                      std::to_string(c2) + ") do not span an intercalate");
  }
  return swap_intercalate(p, *ic);
}

bool corner_conditions(const PartialLatinSquare& p) {
  return p.at(1, 1) == 1 && p.at(1, 3) == 2 && p.at(2, 1) == 2 && p.at(2, 2) == 1 && p.at(3, 1) == 3 &&
         p.at(3, 2) == 2 && p.at(3, 3) == 1;
}

void require_diagonal_ones_twos(const PartialLatinSquare& p, const DiagonalSpec& d, const std::string& stage) {
  for (const Cell& cell : d.cells()) {
    const int s = p.at(cell.row, cell.col);
    if (s != 1 && s != 2) {
      defect(stage, "D2 cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ") holds " +
                        std::to_string(s));
    }
  }
}

std::vector<int> fill_from(const PartialLatinSquare& p, const DiagonalSpec& d) {
  std::vector<int> fill;
  for (const Cell& cell : d.cells()) fill.push_back(p.at(cell.row, cell.col) == 1 ? 0 : 1);
  return fill;
}

// Symbols n+1, n+2 of a lifted completion become 1, 2.
PartialLatinSquare lower_new_symbols(const PartialLatinSquare& l, int n) {
  return relabel_symbols(l, {{n + 1, 1}, {n + 2, 2}});
}

PartialLatinSquare finish(PipelineState& state, PartialLatinSquare l) {
  for (auto it = state.transforms.rbegin(); it != state.transforms.rend(); ++it) l = pls::apply(l, inverse(*it));
  if (!extends(l, state.original)) defect("final", "result does not extend P");
  state.stages.push_back({"final", l});
  return l;
}

}  // namespace

std::string_view to_string(PipelineCase c) {
  switch (c) {
    case PipelineCase::haggkvist:
      return "haggkvist";
    case PipelineCase::a:
      return "a";
    case PipelineCase::b:
      return "b";
    case PipelineCase::c:
      return "c";
  }
  return "?";
}

void PipelineState::record(std::string label) { stages.push_back({std::move(label), current}); }

void PipelineState::push(const Transform& t, std::string label) {
  current = pls::apply(current, t);
  transforms.push_back(t);
  record(std::move(label));
}

Isotopy ct111_normal_isotopy(const PartialLatinSquare& p) {
  const int n = p.order();
  const Permutation sigma = row_permutation(p, 1, 2);
  std::vector<int> new_col(static_cast<std::size_t>(n), 0);  // old column -> new
  const int a = p.at(1, 1);
  new_col[0] = 1;
  new_col[static_cast<std::size_t>(p.column_of(1, sigma(a)) - 1)] = 2;
  new_col[static_cast<std::size_t>(p.column_of(1, sigma(sigma(a))) - 1)] = 3;
  int next = 4;
  for (int c = 4; c <= n; ++c) {
    if (new_col[static_cast<std::size_t>(c - 1)] != 0) continue;
    new_col[static_cast<std::size_t>(c - 1)] = next;
    new_col[static_cast<std::size_t>(p.column_of(1, sigma(p.at(1, c))) - 1)] = next + 1;
    next += 2;
  }
  const Permutation cols(new_col);
  std::vector<int> new_symbol(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) new_symbol[static_cast<std::size_t>(p.at(1, c) - 1)] = cols(c);
  const Permutation symbols(new_symbol);
  std::vector<int> new_row(static_cast<std::size_t>(n));
  new_row[0] = 1;
  new_row[1] = 2;
  for (int r = 3; r <= n; ++r) new_row[static_cast<std::size_t>(r - 1)] = symbols(p.at(r, 1));
  return {Permutation(new_row), cols, symbols};
}

PipelineState normalize(const PartialLatinSquare& p) {
  if (!in_band_form(p, 2, 3) || !p.has_standard_alphabet()) {
    throw Error(ErrorCode::NotNormalForm, "expected PLS(2,3;n) over [n]");
  }
  const CycleType type = cycle_type(p);
  const int pairs = type.multiplicity("00");
  if (type.entries().size() != 2 || type.multiplicity("111") != 1 || pairs < 1) {
    throw Error(ErrorCode::WrongCycleType, "expected {(111,1),(00,k+2)}, got " + type.to_string());
  }
  if (pairs - 2 < 3) {
    throw Error(ErrorCode::OrderTooSmall, "k = " + std::to_string(pairs - 2) + " < 3");
  }

  const Isotopy iso = ct111_normal_isotopy(p);
  const int n = p.order();

  PipelineState state;
  state.original = p;
  state.current = p;
  state.record("input");
  state.push(iso, "normal-form");
  const PartialLatinSquare& q = state.current;
  bool ok = q.at(2, 2) == 3 && q.at(2, 3) == 1;
  for (int i = 1; i <= n; ++i) ok = ok && q.at(1, i) == i && q.at(i, 1) == i;
  for (int i = 2; 2 * i + 1 <= n; ++i) ok = ok && q.at(2, 2 * i) == 2 * i + 1 && q.at(2, 2 * i + 1) == 2 * i;
  if (!ok) defect("normal-form", "normalizing isotopy missed the target layout");
  state.push(ConjugateKind::scr, "conjugated");
  return state;
}

PipelineCase case_split(PipelineState& state) {
  const PartialLatinSquare& cur = state.current;
  if (!corner_conditions(cur)) defect("conjugated", "corner does not have the expected shape");
  state.s1 = cur.at(1, 2);
  state.s2 = cur.at(2, 3);
  if (state.s1 == 3 && state.s2 == 3) {
    state.split = PipelineCase::haggkvist;
  } else if (state.s1 == state.s2) {
    state.split = PipelineCase::c;
  } else if (state.s1 == 3 || state.s2 == 3) {
    state.split = PipelineCase::b;
  } else {
    state.split = PipelineCase::a;
  }
  return state.split;
}

PartialLatinSquare complete_haggkvist(PipelineState& state, const SolverOptions& options) {
  const CompletionCertificate cert = is_completable(state.current, options);
  if (!cert.completable()) defect("haggkvist", "square with a Latin 3x3 corner was not completed");
  state.stages.push_back({"completed", *cert.witness});
  return finish(state, *cert.witness);
}

PartialLatinSquare complete_case_a(PipelineState& state, const SolverOptions& options) {
  const int n = state.current.order();
  state.push(symbols_only(relabeling(n, {{state.s1, 4}, {state.s2, 5}})), "relabeled");
  const PartialLatinSquare cur = state.current;
  const DiagonalSpec d = diagonal(DiagonalKind::augmented_forward, n);
  require_diagonal_ones_twos(cur, d, "relabeled");

  std::vector<int> alphabet;
  for (int s = 3; s <= n; ++s) alphabet.push_back(s);
  Grid g(n - 2, alphabet);
  g.at(1, 1) = 3;
  g.at(1, 2) = 4;
  g.at(1, 3) = 5;
  for (int i = 2; i <= n - 2; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!cur.filled(i + 2, j) || d.contains({i + 2, j})) continue;
      if (j > n - 2) defect("C", "entry off D2 outside the first n-2 columns");
      g.at(i, j) = cur.at(i + 2, j);
    }
  }
  PartialLatinSquare c;
  try {
    c = validate(std::move(g));
  } catch (const Error& e) {
    defect("C", e.what());
  }
  state.stages.push_back({"C", c});
  const PartialLatinSquare c_full = complete_filled_columns(c);
  state.stages.push_back({"C'", c_full});

  const T2Square t2 = t2_construct(c_full, fill_from(cur, d));
  PartialLatinSquare a = lower_new_symbols(smetaniuk_complete_t2(t2, options), n);
  state.stages.push_back({"A", a});

  // Agreement with the 1/2 pattern of the current square, repaired by
  // swapping {1,2} intercalates where needed.
  for (int guard = 0; !extends(a, cur); ++guard) {
    if (guard > n * n) defect("A", "could not align symbols 1 and 2");
    bool repaired = false;
    for (const Triple& t : cur.triples()) {
      if (a.at(t.row, t.col) == t.symbol) continue;
      if (t.symbol > 2 || a.at(t.row, t.col) > 2) defect("A", "disagreement outside symbols 1 and 2");
      const int c2 = a.column_of(t.row, t.symbol);
      const int r2 = a.row_of(t.col, t.symbol);
      a = swap_at(a, std::min(t.row, r2), std::max(t.row, r2), std::min(t.col, c2), std::max(t.col, c2), "A");
      repaired = true;
      break;
    }
    if (!repaired) break;
  }
  state.stages.push_back({"aligned", a});
  return finish(state, a);
}

void reduce_case_b(PipelineState& state) {
  const int n = state.current.order();
  const int other = state.s1 == 3 ? state.s2 : state.s1;
  state.push(symbols_only(relabeling(n, {{other, 4}})), "case-b relabeled");

  std::array<int, 3> rows{1, 2, 3};
  const std::array<Permutation, 4> symbol_choices{
      Permutation::identity(n), Permutation::transposition(n, 3, 4), Permutation::transposition(n, 1, 2),
      Permutation::transposition(n, 1, 2) * Permutation::transposition(n, 3, 4)};
  auto on_first_three = [n](const std::array<int, 3>& images) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = i <= 3 ? images[static_cast<std::size_t>(i - 1)] : i;
    return Permutation(std::move(v));
  };
  do {
    std::array<int, 3> cols{1, 2, 3};
    do {
      for (const Permutation& mu : symbol_choices) {
        const Isotopy iso{on_first_three(rows), on_first_three(cols), mu};
        const PartialLatinSquare candidate = apply_isotopy(state.current, iso);
        const int s1 = candidate.at(1, 2), s2 = candidate.at(2, 3);
        if (corner_conditions(candidate) && s1 == s2 && s1 != 3) {
          state.push(iso, "case-b rearranged");
          state.s1 = s1;
          state.s2 = s2;
          return;
        }
      }
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  defect("case-b", "no rearrangement of the corner reaches case c");
}

PartialLatinSquare complete_case_c(PipelineState& state, const SolverOptions& options) {
  const int n = state.current.order();
  if (state.s1 != state.s2 || state.s1 == 3) defect("case-c", "corner symbols do not match case c");
  if (state.s1 != 4) state.push(symbols_only(relabeling(n, {{state.s1, 4}})), "relabeled");

  // B1
  if (state.current.at(4, 1) == 4 || state.current.at(5, 1) == 4) {
    const Permutation swap_blocks = Permutation::from_cycles(n, {{4, 6}, {5, 7}});
    state.push(lines_only(n, swap_blocks, swap_blocks), "B1");
    state.swapped_b1 = true;
  } else {
    state.record("B1");
  }
  std::set<int> s_set;
  for (int r : {4, 5})
    for (int c = 1; c <= 3; ++c) s_set.insert(state.current.at(r, c));
  state.S.assign(s_set.begin(), s_set.end());
  std::set<int> s3 = s_set;
  s3.insert(3);

  // B2
  for (int q = 6; q <= n && state.q == 0; ++q) {
    const int hits = static_cast<int>(s3.count(state.current.at(q, 2)) + s3.count(state.current.at(q, 3)));
    if (hits <= 1 && state.current.at(q, 1) != 4) state.q = q;
  }
  if (state.q == 0) defect("B2", "no admissible row q");
  const int q = state.q;
  state.current = with_cells(state.current, {{q, 4, 4}}, "B2");
  state.record("B2");

  // B3
  if (s3.count(state.current.at(q, 3)) != 0) {
    state.push(lines_only(n, Permutation::transposition(n, 1, 2), Permutation::transposition(n, 2, 3)), "B3");
    state.swapped_b3 = true;
  } else {
    state.record("B3");
  }
  state.x = state.current.at(q, 3);
  if (s3.count(state.x) != 0) defect("B3", "B3(q,3) lies in S or is 3");

  // B4, B5
  state.current = with_cells(state.current, {{2, 4, state.x}}, "B4");
  state.record("B4");
  const PartialLatinSquare b4 = state.current;
  state.current = swap_at(state.current, 2, q, 3, 4, "B5");
  state.record("B5");

  // alpha, B6
  std::set<int> taken = s_set;
  for (int s : {1, 2, 3, 4, state.x}) taken.insert(s);
  for (int s = 1; s <= n && state.alpha == 0; ++s)
    if (taken.count(s) == 0) state.alpha = s;
  if (state.alpha == 0) defect("B6", "no admissible symbol alpha");
  const int alpha = state.alpha;
  state.current = with_cells(state.current, {{2, 5, alpha}, {3, 4, alpha}, {3, 5, 4}}, "B6");
  if (!intercalate_at(state.current, 2, 3, 4, 5)) defect("B6", "rows 2-3 x columns 4-5 are not an intercalate");
  state.record("B6");

  // B7
  const Isotopy b7{Permutation::transposition(n, 1, 3), Permutation::transposition(n, 1, 2), Permutation::identity(n)};
  state.push(b7, "B7");
  const PartialLatinSquare cur = state.current;
  const DiagonalSpec d = diagonal(DiagonalKind::augmented_forward, n);
  require_diagonal_ones_twos(cur, d, "B7");
  if (cur.at(2, 3) != state.x) defect("B7", "B7(2,3) differs from x");

  // C
  std::vector<int> alphabet;
  for (int s = 3; s <= n; ++s) alphabet.push_back(s);
  Grid g(n - 2, alphabet);
  g.at(1, 1) = 4;
  g.at(1, 2) = 3;
  g.at(1, 3) = state.x;
  g.at(2, 4) = alpha;
  g.at(3, 4) = 4;
  for (int i = 2; i <= n - 2; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!cur.filled(i + 2, j) || d.contains({i + 2, j})) continue;
      if (j > n - 2) defect("C", "entry off D2 outside the first n-2 columns");
      if (g.at(i, j) != kEmpty) defect("C", "collision with a prescribed cell");
      g.at(i, j) = cur.at(i + 2, j);
    }
  }
  PartialLatinSquare c;
  try {
    c = validate(std::move(g));
  } catch (const Error& e) {
    defect("C", e.what());
  }
  state.stages.push_back({"C", c});
  int column4 = 0;
  for (int r = 1; r <= n - 2; ++r) column4 += c.filled(r, 4) ? 1 : 0;
  if (column4 != 3) defect("C", "column 4 should hold three entries");

  const PartialLatinSquare c_prime = complete_columns_plus_partial(c);
  state.stages.push_back({"C'", c_prime});
  Grid g1 = c.grid();
  for (int r = 1; r <= n - 2; ++r) g1.at(r, 4) = c_prime.at(r, 4);
  g1.at(2, 5) = 4;
  g1.at(3, 5) = alpha;
  PartialLatinSquare c1;
  try {
    c1 = validate(std::move(g1));
  } catch (const Error& e) {
    defect("C1", e.what());
  }
  state.stages.push_back({"C1", c1});
  const PartialLatinSquare c1_full = complete_columns_plus_partial(c1);
  state.stages.push_back({"C1'", c1_full});

  // A
  const T2Square t2 = t2_construct(c1_full, fill_from(cur, d));
  const PartialLatinSquare lifted = smetaniuk_complete_t2(t2, options);
  const ObservationReport report = verify_observations(lifted, c1_full, t2.diagonal);
  for (const ObservationItem& item : report.items) {
    if (item.status != ObservationItem::Status::pass) {
      defect("A", "observation '" + item.name + "' " + std::string(to_string(item.status)) + " " + item.detail);
    }
  }
  PartialLatinSquare a = lower_new_symbols(lifted, n);
  state.stages.push_back({"A", a});
  for (int r = 1; r <= n; ++r)
    for (int col = 1; col <= 3; ++col)
      if (a.at(r, col) != cur.at(r, col)) defect("A", "first three columns differ from B7");
  if (a.at(q, 4) != state.x) defect("A", "A(q,4) differs from x");

  // A', final swap
  if (a.at(2, 4) == alpha) {
    a = swap_at(a, 1, 2, 4, 5, "A'");
    state.swapped_f = true;
  }
  state.stages.push_back({"A'", a});
  a = swap_at(a, 2, q, 3, 4, "final swap");
  state.stages.push_back({"swapped", a});
  if (!extends(a, apply_isotopy(b4, b7))) defect("swapped", "result does not contain the image of B4");
  return finish(state, a);
}

PipelineResult complete_theorem32(const PartialLatinSquare& p, const SolverOptions& options) {
  PipelineState state = normalize(p);
  PartialLatinSquare l;
  switch (case_split(state)) {
    case PipelineCase::haggkvist:
      l = complete_haggkvist(state, options);
      break;
    case PipelineCase::a:
      l = complete_case_a(state, options);
      break;
    case PipelineCase::b:
      reduce_case_b(state);
      l = complete_case_c(state, options);
      break;
    case PipelineCase::c:
      l = complete_case_c(state, options);
      break;
  }
  return {std::move(l), std::move(state)};
}

std::string trace_to_text(const PipelineState& state) {
  std::string out;
  for (const PipelineStage& stage : state.stages) {
    out += "# " + stage.label + "\n" + to_grid(stage.square) + "\n";
  }
  return out;
}

}  // namespace pls
