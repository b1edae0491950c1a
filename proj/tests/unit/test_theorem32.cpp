#include <doctest.h>

#include <set>

#include "pls/error.hpp"
#include "pls/generators.hpp"
#include "pls/solver.hpp"
#include "pls/theorem32.hpp"

using namespace pls;

namespace {

CycleType family(int n) { return CycleType({{"111", 1}, {"00", (n - 3) / 2}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::PipelineDefect;
}

}  // namespace

TEST_CASE("normal form") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_with_cycle_type(family(13), rng);
    auto state = normalize(p);
    const auto& normal = state.stages[1].square;
    CHECK(state.stages[1].label == "normal-form");
    for (int i = 1; i <= 13; ++i) {
      CHECK(normal.at(1, i) == i);
      CHECK(normal.at(i, 1) == i);
    }
    CHECK(normal.at(2, 2) == 3);
    CHECK(normal.at(2, 3) == 1);
    for (int i = 2; 2 * i + 1 <= 13; ++i) {
      CHECK(normal.at(2, 2 * i) == 2 * i + 1);
      CHECK(normal.at(2, 2 * i + 1) == 2 * i);
    }
    // Normalizing an already normal square changes nothing.
    auto again = normalize(normal);
    CHECK(again.stages[1].square == normal);
  }
}

TEST_CASE("inputs outside the family are rejected") {
  Rng rng(2);
  CHECK(code_of([&] { normalize(random_with_cycle_type(CycleType::parse("{(11,1),(10,1),(00,5)}"), rng)); }) ==
        ErrorCode::WrongCycleType);
  CHECK(code_of([&] { normalize(random_with_cycle_type(family(11), rng)); }) == ErrorCode::OrderTooSmall);
}

TEST_CASE("every case completes and extends P") {
  Rng rng(3);
  int seen[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 13 + 2 * static_cast<int>(rng() % 3);
    auto p = random_with_cycle_type(family(n), rng);
    auto result = complete_theorem32(p);
    ++seen[static_cast<int>(result.state.split)];
    CHECK(extends(result.completion, p));
    if (trial < 20) CHECK(is_completable(p).completable());
  }
  for (int c = 0; c < 4; ++c) CHECK(seen[c] > 0);
}

TEST_CASE("case c bookkeeping") {
  Rng rng(4);
  for (int found = 0; found < 10;) {
    auto p = random_with_cycle_type(family(13), rng);
    auto state = normalize(p);
    const auto split = case_split(state);
    if (split != PipelineCase::c && split != PipelineCase::b) continue;
    ++found;
    if (split == PipelineCase::b) reduce_case_b(state);
    auto l = complete_case_c(state);
    CHECK(extends(l, p));
    CHECK(state.q >= 6);
    CHECK(state.S.size() <= 6);
    std::set<int> taken(state.S.begin(), state.S.end());
    for (int v : {1, 2, 3, 4, state.x}) taken.insert(v);
    CHECK(taken.size() <= 11);
    CHECK(state.alpha > 4);
    CHECK(std::find(state.S.begin(), state.S.end(), state.alpha) == state.S.end());
    CHECK(state.alpha != state.x);
    CHECK(trace_to_text(state).find("# B7") != std::string::npos);
  }
}
