#include <doctest.h>

#include "pls/error.hpp"
#include "pls/generators.hpp"
#include "pls/reduction.hpp"
#include "pls/solver.hpp"

using namespace pls;

namespace {

// Direct reading of the definitions, used to cross-check find_replacements.
bool latin_line(std::vector<int> line) {
  std::erase(line, kEmpty);
  std::sort(line.begin(), line.end());
  return std::adjacent_find(line.begin(), line.end()) == line.end();
}

std::vector<int> row_of(const PartialLatinSquare& p, int r) {
  std::vector<int> out;
  for (int c = 1; c <= p.order(); ++c) out.push_back(p.at(r, c));
  return out;
}

std::vector<int> col_of(const PartialLatinSquare& p, int c) {
  std::vector<int> out;
  for (int r = 1; r <= p.order(); ++r) out.push_back(p.at(r, c));
  return out;
}

}  // namespace

TEST_CASE("compositions") {
  Rng rng(1);
  auto p = random_band_square(9, rng);
  auto same = compose(p, {LineComposition::Kind::column, 5, 5, 1});
  CHECK(same.cells == col_of(p, 5));
  CHECK(same.latin);
  // Manual substitution.
  auto row = compose(p, {LineComposition::Kind::row, 4, 7, 2});
  auto manual = row_of(p, 4);
  manual[1] = p.at(7, 2);
  CHECK(row.cells == manual);
  CHECK(row.latin == latin_line(manual));
  // R_4 o_1 R_4' where the new entry repeats P(4,2).
  for (int i = 3; i <= 9; ++i) {
    auto composed = compose(p, {LineComposition::Kind::row, 4, i, 1});
    CHECK(composed.latin == (p.at(i, 1) != p.at(4, 2) && p.at(i, 1) != p.at(4, 3)));
  }
  CHECK_THROWS_AS(compose(p, {LineComposition::Kind::column, 5, 6, 3}), Error);
}

TEST_CASE("replacements agree with the definitions") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 9 + static_cast<int>(rng() % 5);
    auto p = random_band_square(n, rng);
    for (int alpha = 1; alpha <= n; ++alpha) {
      bool corner = false;
      for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 3; ++c) corner = corner || p.at(r, c) == alpha;
      if (corner) {
        CHECK_THROWS_AS(find_replacements(p, alpha), Error);
        continue;
      }
      auto rep = find_replacements(p, alpha);
      const int j = p.row_of(1, alpha), k = p.row_of(2, alpha), l = p.row_of(3, alpha);
      const int q = p.column_of(1, alpha), r = p.column_of(2, alpha);
      std::vector<int> rows, cols, selfs;
      for (int i = 3; i <= n; ++i) {
        auto a = row_of(p, j), b = row_of(p, k), c = row_of(p, l);
        a[0] = p.at(i, 1);
        b[1] = p.at(i, 2);
        c[2] = p.at(i, 3);
        if (latin_line(a) && latin_line(b) && latin_line(c)) rows.push_back(i);
      }
      for (int x = 4; x <= n; ++x) {
        auto a = col_of(p, q), b = col_of(p, r);
        a[0] = p.at(1, x);
        b[1] = p.at(2, x);
        if (latin_line(a) && latin_line(b)) {
          cols.push_back(x);
          if (x == q || x == r) selfs.push_back(x);
        }
      }
      CHECK(rep.rows == rows);
      CHECK(rep.columns == cols);
      CHECK(rep.self_columns == selfs);
      CHECK_FALSE(rep.rows.empty());
    }
  }
}

TEST_CASE("self replacement needs a cycle of length at least 3") {
  Rng rng(3);
  auto p = random_with_cycle_type(CycleType::parse("{(111,1),(00,3),(0000,1)}"), rng);
  auto sigma = row_permutation(p, 1, 2);
  for (int alpha = 1; alpha <= p.order(); ++alpha) {
    bool corner = false;
    for (int r = 1; r <= 2; ++r)
      for (int c = 1; c <= 3; ++c) corner = corner || p.at(r, c) == alpha;
    if (corner) continue;
    const bool long_cycle = sigma(alpha) != sigma.inverse()(alpha);
    CHECK(find_replacements(p, alpha).self_columns.empty() == !long_cycle);
    if (long_cycle) CHECK(find_replacements(p, alpha).self_columns.size() == 2);
  }
}

TEST_CASE("reduction shrinks the order and splices alpha out") {
  Rng rng(4);
  auto p = random_with_cycle_type(CycleType::parse("{(1000,1),(11,1),(00,4)}"), rng);
  REQUIRE(p.order() == 14);
  CHECK_FALSE(is_completely_reduced(p));
  auto step = proper_reduction(p);
  REQUIRE(step.has_value());
  CHECK(step->self_replacing());
  auto rep = find_replacements(p, step->alpha);
  CHECK(rep.rows.front() == step->row);
  CHECK(rep.self_columns.front() == step->column);

  auto reduced = reduce(p, *step);
  CHECK(reduced.order() == 13);
  CHECK(in_band_form(reduced, 2, 3));
  CHECK(cycle_type(reduced) == CycleType::parse("{(100,1),(11,1),(00,4)}"));
  CHECK(reduce(p, *step) == reduced);
  // Completability of the reduction carries back to P.
  if (is_completable(reduced).completable()) CHECK(is_completable(p).completable());

  ReductionStep forged = *step;
  forged.row = step->row == 3 ? 4 : 3;
  CHECK_THROWS_AS(reduce(p, forged), Error);
}

TEST_CASE("successive reduction ends in a terminal family") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 9 + static_cast<int>(rng() % 6);
    auto p = random_band_square(n, rng);
    auto trace = successive_reduce(p);
    CHECK(static_cast<int>(trace.steps.size()) <= n - 8);
    CHECK(trace.terminal.order() == n - static_cast<int>(trace.steps.size()));
    auto replay = p;
    for (const auto& step : trace.steps) replay = reduce(replay, step);
    CHECK(replay == trace.terminal);
    if (trace.terminal.order() > 8) CHECK(is_completely_reduced(trace.terminal));
    CHECK_NOTHROW(classify_terminal(trace.terminal));
  }
}

TEST_CASE("completely reduced squares") {
  Rng rng(6);
  CHECK(is_completely_reduced(random_with_cycle_type(CycleType::parse("{(111,1),(00,5)}"), rng)));
  CHECK_FALSE(is_completely_reduced(random_with_cycle_type(CycleType::parse("{(1000,1),(11,1),(00,2)}"), rng)));
  auto reduced = random_with_cycle_type(CycleType::parse("{(111,1),(00,3)}"), rng);
  auto trace = successive_reduce(reduced);
  CHECK(trace.steps.empty());
  CHECK_FALSE(proper_reduction(reduced).has_value());
  CHECK_THROWS_AS(is_completely_reduced(random_band_square(7, rng)), Error);
  CHECK_THROWS_AS(proper_reduction(random_band_square(8, rng)), Error);
}

TEST_CASE("terminal labels") {
  using Kind = TerminalLabel::Kind;
  CHECK(classify_cycle_type(CycleType::parse("{(111,1),(00,4)}")) == TerminalLabel{Kind::e, 2});
  CHECK(classify_cycle_type(CycleType::parse("{(10101,1),(00,3)}")) == TerminalLabel{Kind::g, 2});
  CHECK(classify_cycle_type(CycleType::parse("{(10,3),(00,1)}")) == TerminalLabel{Kind::a, 1});
  CHECK(classify_cycle_type(CycleType::parse("{(01,1),(11,1),(00,3)}")) == TerminalLabel{Kind::b, 2});
  CHECK(classify_cycle_type(CycleType::parse("{(10,1),(110,1),(00,2)}")) == TerminalLabel{Kind::c, 1});
  CHECK(classify_cycle_type(CycleType::parse("{(10,1),(0101,1),(00,1)}")) == TerminalLabel{Kind::d, 1});
  CHECK(classify_cycle_type(CycleType::parse("{(0111,1),(00,2)}")) == TerminalLabel{Kind::f, 1});
  CHECK(classify_cycle_type(CycleType::parse("{(101010,1),(00,4)}")) == TerminalLabel{Kind::h, 4});
  CHECK_THROWS_AS(classify_cycle_type(CycleType::parse("{(1000,1),(11,1),(00,2)}")), Error);
  CHECK_THROWS_AS(classify_cycle_type(CycleType::parse("{(111,1),(00,2)}")), Error);  // k = 0
  Rng rng(7);
  CHECK(classify_terminal(random_band_square(8, rng)).kind == Kind::order8);
  CHECK(to_string(TerminalLabel{Kind::e, 2}) == "(e) k=2");
}
