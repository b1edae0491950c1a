#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "pls/cycle_type.hpp"
#include "pls/error.hpp"
#include "pls/generators.hpp"
#include "pls/search.hpp"
#include "pls/transform.hpp"

using namespace pls;

namespace {

// Second rows written straight from the definition: all permutations of [n],
// filtered.
std::vector<std::vector<int>> naive_second_rows(int n) {
  std::vector<int> row(static_cast<std::size_t>(n));
  std::iota(row.begin(), row.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = row[0] == 2 || (row[0] == 4 && row[1] > 3 && row[2] > 3);
    for (int c = 0; c < n && ok; ++c) ok = row[static_cast<std::size_t>(c)] != c + 1;
    if (ok) out.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

std::vector<std::vector<int>> arrangements(std::vector<int> symbols) {
  std::sort(symbols.begin(), symbols.end());
  std::vector<std::vector<int>> out;
  do out.push_back(symbols);
  while (std::next_permutation(symbols.begin(), symbols.end()));
  return out;
}

// Number of ways to fill columns 2-3 below row 2 given rows 1-2 and column 1:
// every pair of arrangements of the missing symbols, checked row by row.
std::uint64_t naive_fills(int n, const std::vector<int>& row2, const std::vector<int>& col1, int fixed3 = 0,
                          int fixed4 = 0) {
  std::vector<int> miss2, miss3;
  for (int s = 1; s <= n; ++s) {
    if (s != 2 && s != row2[1]) miss2.push_back(s);
    if (s != 3 && s != row2[2]) miss3.push_back(s);
  }
  const auto a2 = arrangements(miss2);
  const auto a3 = arrangements(miss3);
  std::uint64_t count = 0;
  for (const auto& x : a2) {
    if (fixed3 && (x[0] != fixed3 || x[1] != fixed4)) continue;
    bool ok = true;
    for (int i = 0; i < n - 2 && ok; ++i) ok = x[static_cast<std::size_t>(i)] != col1[static_cast<std::size_t>(i)];
    if (!ok) continue;
    for (const auto& y : a3) {
      bool good = true;
      for (int i = 0; i < n - 2 && good; ++i) {
        const auto k = static_cast<std::size_t>(i);
        good = y[k] != col1[k] && y[k] != x[k];
      }
      count += good;
    }
  }
  return count;
}

std::vector<int> lower_column1(int n, int t) {
  std::vector<int> col;
  for (int s = 2; s <= n; ++s)
    if (s != t) col.push_back(s);
  return col;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::PipelineDefect;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("all") == Family::all);
  CHECK(parse_family("ct111") == Family::ct111);
  CHECK_FALSE(parse_family("ct11").has_value());
  CHECK(to_string(Family::ct111) == "ct111");
}

TEST_CASE("second rows at n = 8 match a naive filter") {
  const auto naive = naive_second_rows(8);
  const auto parts = partitions(8, Family::all);
  REQUIRE(parts.size() == naive.size());
  std::size_t with2 = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(parts[i].id == static_cast<int>(i));
    CHECK(parts[i].prefix == naive[i]);
    with2 += naive[i][0] == 2;
  }
  // t = 2 rows are the derangements of [8] with 1 -> 2, a seventh of D(8).
  CHECK(with2 == 14833 / 7);
}

TEST_CASE("column fills at n = 8 match a naive double loop") {
  const auto parts = partitions(8, Family::all);
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{777}, std::size_t{2500}, parts.size() - 1}) {
    const auto& part = parts[i];
    std::set<std::vector<int>> seen;
    const auto count = enumerate_partition(8, Family::all, part, [&](const PartialLatinSquare& p) {
      CHECK(is_canonical(p, Family::all));
      CHECK(in_band_form(p, 2, 3));
      seen.insert(p.grid().cells);
      return true;
    });
    CHECK(seen.size() == count);
    CHECK(count == naive_fills(8, part.prefix, lower_column1(8, part.prefix[0])));
  }
}

TEST_CASE("ct111 at n = 9: total matches a naive double loop") {
  const std::vector<int> row2{2, 3, 1, 5, 4, 7, 6, 9, 8};
  const std::vector<int> col1{3, 4, 5, 6, 7, 8, 9};
  const auto expected = naive_fills(9, row2, col1);
  const CycleType want = CycleType::parse("{(111,1),(00,3)}");
  std::set<std::vector<int>> sample;
  std::uint64_t seen = 0;
  const auto count = enumerate(9, Family::ct111, [&](const PartialLatinSquare& p) {
    if (seen++ % 16 == 0) {
      CHECK(cycle_type(p) == want);
      CHECK(is_canonical(p, Family::ct111));
      sample.insert(p.grid().cells);
    }
    return true;
  });
  CHECK(count == expected);
  CHECK(sample.size() == (count + 15) / 16);  // no duplicates in the sample

  // Per-partition counts also agree.
  const auto parts = partitions(9, Family::ct111);
  for (std::size_t i : {std::size_t{0}, std::size_t{17}, parts.size() - 1}) {
    const auto c = enumerate_partition(9, Family::ct111, parts[i], [](const PartialLatinSquare&) { return true; });
    CHECK(c == naive_fills(9, row2, col1, parts[i].prefix[0], parts[i].prefix[1]));
  }
}

TEST_CASE("visitor can stop the enumeration") {
  int calls = 0;
  const auto count = enumerate(8, Family::all, [&](const PartialLatinSquare&) { return ++calls < 5; });
  CHECK(count == 5);
  CHECK(calls == 5);
}

TEST_CASE("canonical isotopy reaches an enumerated square") {
  Rng rng(11);
  const auto parts = partitions(8, Family::all);
  std::set<std::vector<int>> rows;
  for (const auto& p : parts) rows.insert(p.prefix);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_band_square(8, rng);
    const auto q = apply_isotopy(p, canonical_isotopy(p, Family::all));
    REQUIRE(is_canonical(q, Family::all));
    CHECK(cycle_type(q) == cycle_type(p));
    std::vector<int> row2;
    for (int c = 1; c <= 8; ++c) row2.push_back(q.at(2, c));
    REQUIRE(rows.count(row2) == 1);
    if (trial < 10) {
      const auto it = std::find_if(parts.begin(), parts.end(), [&](const Partition& x) { return x.prefix == row2; });
      bool found = false;
      enumerate_partition(8, Family::all, *it, [&](const PartialLatinSquare& e) {
        found = e == q;
        return !found;
      });
      CHECK(found);
    }
  }
  for (int n : {9, 11}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = random_with_cycle_type(CycleType({{"111", 1}, {"00", (n - 3) / 2}}), rng);
      const auto q = apply_isotopy(p, canonical_isotopy(p, Family::ct111));
      CHECK(is_canonical(q, Family::ct111));
    }
  }
  const auto wrong = random_with_cycle_type(CycleType::parse("{(111,1),(000,2)}"), rng);
  CHECK(code_of([&] { canonical_isotopy(wrong, Family::ct111); }) == ErrorCode::WrongCycleType);
}

TEST_CASE("partition preconditions") {
  CHECK(code_of([] { partitions(7, Family::all); }) == ErrorCode::OrderTooSmall);
  CHECK(code_of([] { partitions(10, Family::ct111); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { verify_family(9, Family::all); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { verify_family(13, Family::ct111); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("sampled verification") {
  for (auto [n, family] : {std::pair{8, Family::all}, std::pair{9, Family::ct111}, std::pair{11, Family::ct111}}) {
    VerifyOptions options;
    options.samples = 1500;
    options.chunk = 400;
    options.jobs = 2;
    const auto report = verify_family(n, family, options);
    CHECK(report.consistent());
    CHECK(report.instances == 1500);
    CHECK(report.completable == 1500);
    CHECK(report.witnesses.empty());
    CHECK(report.partitions.size() == 4);
  }
}

TEST_CASE("checkpoints resume to the same report") {
  const std::string path = temp_path("pls_search_checkpoint.txt");
  std::filesystem::remove(path);
  VerifyOptions options;
  options.samples = 2000;
  options.chunk = 250;
  options.checkpoint = path;
  const auto first = verify_family(8, Family::all, options);
  CHECK(first.resumed == 0);

  // Keep the header and three partitions, then resume.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  REQUIRE(lines.size() == 9);
  {
    std::ofstream out(path, std::ios::trunc);
    for (int i = 0; i < 4; ++i) out << lines[static_cast<std::size_t>(i)] << '\n';
  }
  options.jobs = 3;
  const auto second = verify_family(8, Family::all, options);
  CHECK(second.resumed == 3);
  CHECK(second.instances == first.instances);
  CHECK(second.completable == first.completable);
  REQUIRE(second.partitions.size() == first.partitions.size());
  for (std::size_t i = 0; i < first.partitions.size(); ++i) {
    CHECK(second.partitions[i].id == first.partitions[i].id);
    CHECK(second.partitions[i].completable == first.partitions[i].completable);
    CHECK(second.partitions[i].total == first.partitions[i].total);
  }

  // A finished checkpoint is reused wholesale.
  const auto third = verify_family(8, Family::all, options);
  CHECK(third.resumed == 8);
  CHECK(third.instances == first.instances);

  // A checkpoint from another run is refused.
  options.seed = 2;
  CHECK(code_of([&] { verify_family(8, Family::all, options); }) == ErrorCode::PreconditionViolated);
  std::filesystem::remove(path);
}

TEST_CASE("solver budget surfaces from the workers") {
  VerifyOptions options;
  options.samples = 100;
  options.jobs = 2;
  options.solver.node_budget = 1;
  CHECK(code_of([&] { verify_family(9, Family::ct111, options); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("report json") {
  VerifyOptions options;
  options.samples = 10;
  const auto json = report_to_json(verify_family(9, Family::ct111, options));
  CHECK(json.find("\"family\": \"ct111\"") != std::string::npos);
  CHECK(json.find("\"non_completable\": 0") != std::string::npos);
  CHECK(json.find("\"mode\": \"sample\"") != std::string::npos);
}

TEST_CASE("Latin-corner completion dispatch") {
  Rng rng(3);
  struct Case {
    const char* type;
    int terminal;
    CorollaryPath path;
  };
  const std::vector<Case> cases = {
      {"{(111,1),(00,1),(000,4)}", 13, CorollaryPath::pipeline},
      {"{(111,1),(00,1),(000,3)}", 11, CorollaryPath::oracle},
      {"{(111,1),(00,5)}", 13, CorollaryPath::pipeline},
  };
  for (const auto& c : cases) {
    const auto p = random_with_cycle_type(CycleType::parse(c.type), rng);
    const auto result = complete_corollary(p);
    CHECK(result.trace.terminal.order() == c.terminal);
    CHECK(result.path == c.path);
    CHECK(result.label.kind == TerminalLabel::Kind::e);
    CHECK(extends(result.terminal_completion, result.trace.terminal));
    REQUIRE(result.certificate.completable());
    CHECK(extends(*result.certificate.witness, p));
  }
  for (int n = 8; n <= 17; ++n) {
    const auto p = random_latin_corner(n, rng);
    const auto result = complete_corollary(p);
    REQUIRE(result.certificate.completable());
    CHECK(extends(*result.certificate.witness, p));
  }
}

TEST_CASE("Latin-corner completion preconditions") {
  Rng rng(4);
  const auto open = random_with_cycle_type(CycleType::parse("{(10,3),(00,2)}"), rng);
  CHECK(code_of([&] { complete_corollary(open); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { complete_corollary(random_latin_corner(7, rng)); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { complete_corollary(PartialLatinSquare::empty(9)); }) == ErrorCode::PreconditionViolated);
}
