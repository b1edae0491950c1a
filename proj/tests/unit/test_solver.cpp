#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pls/error.hpp"
#include "pls/io.hpp"
#include "pls/solver.hpp"

using namespace pls;

TEST_CASE("printed small-order squares are not completable") {
  for (const char* name : {"/noncompletable_5.txt", "/noncompletable_6.txt", "/noncompletable_7.txt"}) {
    auto p = read_square(std::string(PLS_FIXTURE_DIR) + name);
    auto cert = is_completable(p);
    CHECK_FALSE(cert.completable());
    CHECK_FALSE(cert.witness.has_value());
  }
  // Cross-check the two smaller ones with the naive search.
  CHECK_FALSE(oracle::completable(read_square(PLS_FIXTURE_DIR "/noncompletable_5.txt")));
  CHECK_FALSE(oracle::completable(read_square(PLS_FIXTURE_DIR "/noncompletable_6.txt")));
}

TEST_CASE("completion counts match naive enumeration") {
  CHECK(count_completions(PartialLatinSquare::empty(3), 1000) == 12);
  CHECK(count_completions(PartialLatinSquare::empty(4), 1000) == 576);
  CHECK(oracle::count_completions(PartialLatinSquare::empty(4)) == 576);
  CHECK(count_completions(PartialLatinSquare::empty(4), 10) == 10);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    auto rows = oracle::random_isotope_of_cyclic(n, rng);
    for (auto& row : rows)
      for (auto& v : row)
        if (rng() % 4 != 0) v = 0;
    // Random extra clashes make some instances non-completable.
    auto p = PartialLatinSquare::from_rows(rows);
    CHECK(count_completions(p, 1u << 30) == oracle::count_completions(p));
  }
}

TEST_CASE("witnesses extend the query") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    // Sparse random partial square built greedily.
    for (int k = 0; k < n; ++k) {
      const int r = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n), s = 1 + static_cast<int>(rng() % n);
      bool ok = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0;
      for (int j = 0; j < n && ok; ++j)
        ok = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != s && rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] != s;
      if (ok) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
    }
    auto p = PartialLatinSquare::from_rows(rows);
    auto cert = is_completable(p);
    if (n <= 5) CHECK(cert.completable() == oracle::completable(p));
    if (cert.completable()) CHECK(extends(*cert.witness, p));
  }
}

TEST_CASE("non-standard alphabets are solved by rank") {
  Grid g(3, {4, 7, 9});
  g.at(1, 1) = 7;
  g.at(2, 2) = 9;
  auto cert = is_completable(validate(g));
  REQUIRE(cert.completable());
  CHECK(cert.witness->alphabet() == std::vector<int>{4, 7, 9});
  CHECK(cert.witness->at(1, 1) == 7);
}

TEST_CASE("constraints") {
  auto p = PartialLatinSquare::empty(4);
  const CellConstraint cs[] = {CellConstraint::force({1, 1}, 3), CellConstraint::forbid({2, 2}, {1, 2, 4})};
  auto cert = complete_with_constraints(p, cs);
  REQUIRE(cert.completable());
  CHECK(cert.witness->at(1, 1) == 3);
  CHECK(cert.witness->at(2, 2) == 3);
  const CellConstraint bad[] = {CellConstraint::force({1, 1}, 3), CellConstraint::forbid({1, 1}, {3})};
  CHECK_THROWS_AS(complete_with_constraints(p, bad), Error);
  const CellConstraint clash[] = {CellConstraint::force({1, 1}, 3), CellConstraint::force({1, 2}, 3)};
  CHECK_FALSE(complete_with_constraints(p, clash).completable());
}

TEST_CASE("node budget") {
  SolverOptions tight;
  tight.node_budget = 3;
  CHECK_THROWS_AS(is_completable(PartialLatinSquare::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 0},
                                                               {0, 0, 0, 0, 0, 0, 0, 2}}),
                                  tight),
                  Error);
}
