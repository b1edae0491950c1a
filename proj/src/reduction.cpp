#include "pls/reduction.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "pls/error.hpp"

namespace pls {

namespace {

void require_normal_form(const PartialLatinSquare& p) {
  if (!in_band_form(p, 2, 3)) throw Error(ErrorCode::NotNormalForm, "expected rows 1-2 and columns 1-3 filled");
  if (!p.has_standard_alphabet()) throw Error(ErrorCode::NotNormalForm, "expected the symbol set [n]");
}

bool no_repeats(const std::vector<int>& line) {
  std::vector<int> seen;
  for (int s : line)
    if (s != kEmpty) seen.push_back(s);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool in_corner(const PartialLatinSquare& p, int alpha) {
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 3; ++c)
      if (p.at(r, c) == alpha) return true;
  return false;
}

AlphaLines locate(const PartialLatinSquare& p, int alpha) {
  return {p.row_of(1, alpha), p.row_of(2, alpha), p.row_of(3, alpha), p.column_of(1, alpha),
          p.column_of(2, alpha)};
}

bool row_replaces(const PartialLatinSquare& p, const AlphaLines& a, int i) {
  return p.at(i, 1) != p.at(a.j, 2) && p.at(i, 1) != p.at(a.j, 3) && p.at(i, 2) != p.at(a.k, 1) &&
         p.at(i, 2) != p.at(a.k, 3) && p.at(i, 3) != p.at(a.l, 1) && p.at(i, 3) != p.at(a.l, 2);
}

bool column_replaces(const PartialLatinSquare& p, const AlphaLines& a, int col) {
  return p.at(1, col) != p.at(2, a.q) && p.at(2, col) != p.at(1, a.r);
}

// Moves `removed` to n and keeps the order of everything else.
Permutation push_to_end(int n, int removed) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x - 1)] = x < removed ? x : (x == removed ? n : x - 1);
  return Permutation(std::move(images));
}

// Terminal words in canonical rotation.
constexpr std::array<std::string_view, 9> kTerminalWords = {"00",  "01",   "11",    "011",    "111",
                                                             "0101", "0111", "01011", "010101"};

}  // namespace

ComposedLine compose(const PartialLatinSquare& p, const LineComposition& c) {
  require_normal_form(p);
  const int n = p.order();
  const bool column = c.kind == LineComposition::Kind::column;
  const int band = column ? 2 : 3;
  if (c.target < 1 || c.target > n || c.source < 1 || c.source > n || c.position < 1 || c.position > band) {
    throw Error(ErrorCode::IndexOutOfRange, "composition indices");
  }
  ComposedLine out;
  for (int x = 1; x <= n; ++x) out.cells.push_back(column ? p.at(x, c.target) : p.at(c.target, x));
  out.cells[static_cast<std::size_t>(c.position - 1)] =
      column ? p.at(c.position, c.source) : p.at(c.source, c.position);
  out.latin = no_repeats(out.cells);
  return out;
}

Replacements find_replacements(const PartialLatinSquare& p, int alpha) {
  require_normal_form(p);
  const int n = p.order();
  if (alpha < 1 || alpha > n) throw Error(ErrorCode::IndexOutOfRange, "symbol " + std::to_string(alpha));
  if (in_corner(p, alpha)) {
    throw Error(ErrorCode::AlphaInCorner, "symbol " + std::to_string(alpha) + " lies in the 2x3 corner");
  }
  Replacements out;
  out.lines = locate(p, alpha);
  for (int i = 3; i <= n; ++i)
    if (row_replaces(p, out.lines, i)) out.rows.push_back(i);
  for (int col = 4; col <= n; ++col) {
    if (!column_replaces(p, out.lines, col)) continue;
    out.columns.push_back(col);
    if (col == out.lines.q || col == out.lines.r) out.self_columns.push_back(col);
  }
  return out;
}

ReductionStep make_step(const PartialLatinSquare& p, int alpha, int row, int column) {
  require_normal_form(p);
  const int n = p.order();
  if (alpha < 1 || alpha > n || row < 3 || row > n || column < 4 || column > n || in_corner(p, alpha)) {
    throw Error(ErrorCode::InvalidStep, "indices outside the admissible range");
  }
  const AlphaLines lines = locate(p, alpha);
  if (!row_replaces(p, lines, row)) {
    throw Error(ErrorCode::InvalidStep, "row " + std::to_string(row) + " does not replace " + std::to_string(alpha));
  }
  if (!column_replaces(p, lines, column)) {
    throw Error(ErrorCode::InvalidStep,
                "column " + std::to_string(column) + " does not replace " + std::to_string(alpha));
  }
  return {n, alpha, row, column, lines,
          Isotopy{push_to_end(n, row), push_to_end(n, column), push_to_end(n, alpha)}};
}

PartialLatinSquare reduce(const PartialLatinSquare& p, const ReductionStep& step) {
  if (step.order != p.order() || !(make_step(p, step.alpha, step.row, step.column) == step)) {
    throw Error(ErrorCode::InvalidStep, "step was recorded for a different square");
  }
  const int n = p.order();
  const AlphaLines& a = step.lines;
  Grid g = p.grid();
  g.at(a.j, 1) = p.at(step.row, 1);
  g.at(a.k, 2) = p.at(step.row, 2);
  g.at(a.l, 3) = p.at(step.row, 3);
  g.at(1, a.q) = p.at(1, step.column);
  g.at(2, a.r) = p.at(2, step.column);
  // Row i and column p disappear; whatever sits there is not carried over.
  Grid out(n - 1);
  for (int r = 1; r <= n; ++r) {
    if (r == step.row) continue;
    for (int c = 1; c <= n; ++c) {
      if (c == step.column || g.at(r, c) == kEmpty) continue;
      const int s = g.at(r, c);
      out.at(step.normalization.rows(r), step.normalization.cols(c)) = step.normalization.symbols(s);
    }
  }
  PartialLatinSquare result = validate(std::move(out));
  if (!in_band_form(result, 2, 3)) throw Error(ErrorCode::InvalidStep, "reduction left the normal form");
  return result;
}

bool is_completely_reduced(const PartialLatinSquare& p) {
  require_normal_form(p);
  if (p.order() < 8) throw Error(ErrorCode::OrderTooSmall, "complete reduction is defined for n >= 8");
  const CycleType type = cycle_type(p);
  return std::all_of(type.entries().begin(), type.entries().end(), [](const CycleType::Entry& e) {
    return std::find(kTerminalWords.begin(), kTerminalWords.end(), e.word) != kTerminalWords.end();
  });
}

std::optional<ReductionStep> proper_reduction(const PartialLatinSquare& p) {
  require_normal_form(p);
  if (p.order() < 9) throw Error(ErrorCode::OrderTooSmall, "proper reductions are considered for n >= 9");
  for (int alpha = 1; alpha <= p.order(); ++alpha) {
    if (in_corner(p, alpha)) continue;
    const Replacements rep = find_replacements(p, alpha);
    if (rep.rows.empty() || rep.self_columns.empty()) continue;
    return make_step(p, alpha, rep.rows.front(), rep.self_columns.front());
  }
  return std::nullopt;
}

ReductionTrace successive_reduce(const PartialLatinSquare& p) {
  require_normal_form(p);
  if (p.order() < 8) throw Error(ErrorCode::OrderTooSmall, "successive reduction needs n >= 8");
  ReductionTrace trace{p, {}};
  while (trace.terminal.order() > 8) {
    auto step = proper_reduction(trace.terminal);
    if (!step) break;
    trace.terminal = reduce(trace.terminal, *step);
    trace.steps.push_back(*step);
  }
  return trace;
}

std::string to_string(const TerminalLabel& label) {
  if (label.kind == TerminalLabel::Kind::order8) return "order-8";
  const char letter = static_cast<char>('a' + (static_cast<int>(label.kind) - static_cast<int>(TerminalLabel::Kind::a)));
  return std::string("(") + letter + ") k=" + std::to_string(label.k);
}

TerminalLabel classify_cycle_type(const CycleType& type) {
  using Kind = TerminalLabel::Kind;
  const int zeros = type.multiplicity("00");
  std::vector<CycleType::Entry> rest;
  for (const auto& e : type.entries())
    if (e.word != "00") rest.push_back(e);
  using Words = std::vector<std::pair<std::string, int>>;
  auto only = [&](const Words& want) {
    if (rest.size() != want.size()) return false;
    for (const auto& [word, mult] : want)
      if (type.multiplicity(canonical_rotation(word)) != mult) return false;
    return true;
  };
  struct Family {
    Kind kind;
    Words words;
    int offset;  // number of 00 cycles is k + offset
  };
  const Family families[] = {
      {Kind::a, {{"10", 3}}, 0},          {Kind::b, {{"10", 1}, {"11", 1}}, 1},
      {Kind::c, {{"10", 1}, {"101", 1}}, 1}, {Kind::d, {{"10", 1}, {"1010", 1}}, 0},
      {Kind::e, {{"111", 1}}, 2},         {Kind::f, {{"1110", 1}}, 1},
      {Kind::g, {{"10101", 1}}, 1},       {Kind::h, {{"101010", 1}}, 0},
  };
  for (const Family& f : families) {
    if (only(f.words) && zeros - f.offset >= 1) return {f.kind, zeros - f.offset};
  }
  throw Error(ErrorCode::Unclassifiable, "cycle type " + type.to_string() + " is not a terminal family");
}

TerminalLabel classify_terminal(const PartialLatinSquare& p) {
  require_normal_form(p);
  if (p.order() == 8) return {TerminalLabel::Kind::order8, 0};
  return classify_cycle_type(cycle_type(p));
}

std::string trace_to_json(const std::vector<ReductionStep>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const ReductionStep& s : steps) {
    out.push_back({{"order", s.order},
                   {"alpha", s.alpha},
                   {"row", s.row},
                   {"column", s.column},
                   {"j", s.lines.j},
                   {"k", s.lines.k},
                   {"l", s.lines.l},
                   {"q", s.lines.q},
                   {"r", s.lines.r},
                   {"self_replacing", s.self_replacing()}});
  }
  return out.dump();
}

}  // namespace pls
