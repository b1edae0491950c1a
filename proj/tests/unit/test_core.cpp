#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pls/cycle_type.hpp"
#include "pls/diagonal.hpp"
#include "pls/error.hpp"
#include "pls/intercalate.hpp"
#include "pls/io.hpp"
#include "pls/transform.hpp"

using namespace pls;

namespace {

PartialLatinSquare cyclic(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rows[static_cast<std::size_t>(r)].push_back((r + c) % n + 1);
  return PartialLatinSquare::from_rows(rows);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::PipelineDefect;
}

}  // namespace

TEST_CASE("validate accepts the order-5 fixture and empty grids") {
  auto p = read_square(PLS_FIXTURE_DIR "/noncompletable_5.txt");
  CHECK(p.order() == 5);
  CHECK(p.filled_count() == 5 * 2 + 3 * 3);
  CHECK(PartialLatinSquare::empty(6).filled_count() == 0);
}

TEST_CASE("validate reports the offending line") {
  Grid g(4);
  g.at(1, 1) = 1;
  g.at(1, 3) = 1;
  try {
    validate(g);
    FAIL("expected DuplicateError");
  } catch (const DuplicateError& e) {
    CHECK(e.code() == ErrorCode::DuplicateInRow);
    CHECK(e.line() == 1);
    CHECK(e.symbol() == 1);
  }
  Grid h(4);
  h.at(1, 2) = 3;
  h.at(4, 2) = 3;
  try {
    validate(h);
    FAIL("expected DuplicateError");
  } catch (const DuplicateError& e) {
    CHECK(e.code() == ErrorCode::DuplicateInColumn);
    CHECK(e.line() == 2);
  }
  Grid k(3);
  k.at(2, 2) = 4;
  CHECK(code_of([&] { validate(k); }) == ErrorCode::SymbolOutOfAlphabet);
}

TEST_CASE("triple and grid views agree") {
  std::mt19937_64 rng(7);
  auto full = oracle::random_isotope_of_cyclic(6, rng);
  for (auto& row : full)
    for (auto& v : row)
      if (rng() % 2) v = 0;
  auto p = PartialLatinSquare::from_rows(full);
  auto triples = p.triples();
  CHECK(static_cast<int>(triples.size()) == p.filled_count());
  CHECK(PartialLatinSquare::from_triples(6, triples) == p);
}

TEST_CASE("permutations compose right to left") {
  auto a = Permutation::from_cycles(4, {{1, 2}});
  auto b = Permutation::from_cycles(4, {{2, 3}});
  CHECK((a * b)(2) == 3);
  CHECK((a * b)(3) == 1);
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::from_cycles(5, {{1, 3, 5}}).to_cycle_string() == "(1 3 5)");
  CHECK(code_of([] { Permutation({1, 1, 2}); }) == ErrorCode::PermutationSizeMismatch);
}

TEST_CASE("conjugates form the symmetric group on coordinates") {
  std::mt19937_64 rng(11);
  auto rows = oracle::random_isotope_of_cyclic(5, rng);
  rows[0][0] = rows[2][3] = rows[4][4] = 0;
  auto p = PartialLatinSquare::from_rows(rows);
  for (auto a : kAllConjugates) {
    CHECK(conjugate(conjugate(p, a), inverse(a)) == p);
    for (auto b : kAllConjugates) CHECK(conjugate(conjugate(p, a), b) == conjugate(p, compose(a, b)));
  }
  // Transpose.
  auto t = conjugate(p, ConjugateKind::crs);
  for (int r = 1; r <= 5; ++r)
    for (int c = 1; c <= 5; ++c) CHECK(t.at(r, c) == p.at(c, r));
  // scr on a single triple.
  const Triple one[] = {{1, 2, 3}};
  auto q = conjugate(PartialLatinSquare::from_triples(3, one), ConjugateKind::scr);
  CHECK(q.at(3, 2) == 1);
}

TEST_CASE("isotopies compose and invert") {
  auto p = cyclic(5);
  Isotopy f{Permutation::from_cycles(5, {{1, 2, 3}}), Permutation::from_cycles(5, {{4, 5}}),
            Permutation::from_cycles(5, {{1, 5}})};
  Isotopy g{Permutation::from_cycles(5, {{2, 4}}), Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}),
            Permutation::identity(5)};
  CHECK(apply_isotopy(apply_isotopy(p, f), f.inverse()) == p);
  CHECK(apply_isotopy(apply_isotopy(p, f), g) == apply_isotopy(p, g.after(f)));
  auto moved = apply_isotopy(p, f);
  CHECK(moved.at(2, 5) == 4);  // (1,4,4)
  CHECK(moved.at(2, 4) == 1);  // (1,5,5)
}

TEST_CASE("intercalates are found exactly once") {
  auto p = cyclic(4);
  std::size_t brute = 0;
  for (int r1 = 1; r1 <= 4; ++r1)
    for (int r2 = r1 + 1; r2 <= 4; ++r2)
      for (int c1 = 1; c1 <= 4; ++c1)
        for (int c2 = c1 + 1; c2 <= 4; ++c2)
          if (p.at(r1, c1) == p.at(r2, c2) && p.at(r1, c2) == p.at(r2, c1)) ++brute;
  CHECK(brute == 4);
  CHECK(find_intercalates(p).size() == brute);
  CHECK(find_intercalates(cyclic(5)).empty());
  auto klein = PartialLatinSquare::from_rows({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
  CHECK(find_intercalates(klein).size() == 12);
}

TEST_CASE("intercalate swap is an involution") {
  auto p = cyclic(4);
  for (const auto& ic : find_intercalates(p)) {
    auto q = swap_intercalate(p, ic);
    CHECK(q != p);
    CHECK(q.is_complete());
    Intercalate back = ic;
    std::swap(back.s1, back.s2);
    CHECK(swap_intercalate(q, back) == p);
  }
  CHECK(code_of([&] { swap_intercalate(cyclic(5), Intercalate{1, 2, 1, 2, 1, 2}); }) ==
        ErrorCode::NotAnIntercalate);
}

TEST_CASE("row permutation and cycle type") {
  // Order-5 fixture: row 2 is 2 4 5 3 1.
  auto p = read_square(PLS_FIXTURE_DIR "/noncompletable_5.txt");
  auto sigma = row_permutation(p, 1, 2);
  CHECK(sigma(1) == 2);
  CHECK(sigma(2) == 4);
  CHECK(sigma.to_cycle_string() == "(1 2 4 3 5)");
  // 1,2,3 are the marked symbols: word 1 1 0 1 0 -> least rotation 01011.
  auto ct = cycle_type(p);
  CHECK(ct == CycleType({{"11010", 1}}));
  CHECK(ct.to_string() == "{(01011,1)}");
  CHECK(CycleType({{"101", 1}}) == CycleType({{"011", 1}}));
  CHECK(CycleType::parse("{(111,1),(00,5)}") == CycleType({{"00", 5}, {"111", 1}}));
  CHECK(CycleType::parse("{(111,1),(00,5)}").total_length() == 13);
  CHECK(code_of([] { cycle_type(PartialLatinSquare::empty(5)); }) == ErrorCode::NotNormalForm);
}

TEST_CASE("diagonal shapes") {
  auto d6 = diagonal(DiagonalKind::augmented_forward, 6);
  CHECK(d6.cells().size() == 12);
  CHECK(d6.contains({1, 2}));
  CHECK(d6.below({3, 1}));
  CHECK(d6.above({1, 3}));
  auto d7 = diagonal(DiagonalKind::augmented_forward, 7);
  CHECK(d7.cells().size() == 4 + 4 * 2);
  CHECK(d7.contains({2, 1}));
  CHECK_FALSE(d7.contains({2, 2}));
  CHECK(d7.above({2, 2}));
  CHECK(d7.below({3, 1}));
  CHECK(diagonal(DiagonalKind::forward, 4).cells().size() == 4);
  CHECK(code_of([] { diagonal(DiagonalKind::augmented_forward, 4); }) == ErrorCode::OrderTooSmall);
}

TEST_CASE("grid and JSON round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    auto rows = oracle::random_isotope_of_cyclic(n, rng);
    for (auto& row : rows)
      for (auto& v : row)
        if (rng() % 3 == 0) v = 0;
    auto p = PartialLatinSquare::from_rows(rows);
    CHECK(parse_grid(to_grid(p)) == p);
    CHECK(parse_json(to_json(p)) == p);
    CHECK(parse_square(to_json(p)) == p);
  }
  auto shifted = relabel_symbols(cyclic(3), {{1, 7}, {2, 8}, {3, 9}});
  CHECK(parse_grid(to_grid(shifted)) == shifted);
  CHECK(parse_json(to_json(shifted)) == shifted);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_grid("1 2\n2 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_grid("1 2 3\n2 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_json("{\"n\": 2,\n \"cells\": [[1,1,1],}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
