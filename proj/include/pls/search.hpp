#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pls/reduction.hpp"
#include "pls/solver.hpp"
#include "pls/square.hpp"
#include "pls/transform.hpp"

namespace pls {

// all    every PLS(2,3;n), up to isotopy.
// ct111  PLS(2,3;n) with cycle type {(111,1),(00,(n-3)/2)}, n odd.
enum class Family { all, ct111 };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

// Canonical forms.
//
// all: row 1 is the identity, P(2,1) = t with t in {2, 4}, and column 1 holds
// 1, t and then the remaining symbols in increasing order. t = 4 is used only
// when no corner column sends its row-1 symbol to a corner symbol, so then
// P(2,2) and P(2,3) avoid {1,2,3} as well. Row 1 and column 1 cannot both be
// the identity in general: the (1,2)-row-permutation may move every corner
// symbol out of the corner.
//
// ct111: the normal form of the main construction; rows 1-2 and column 1 are
// fixed, columns 2-3 below row 2 vary.
bool is_canonical(const PartialLatinSquare& p, Family family);

// Isotopy taking a member of the family to canonical form. Throws
// NotNormalForm (not PLS(2,3;n) over [n]) or WrongCycleType (ct111 only).
Isotopy canonical_isotopy(const PartialLatinSquare& p, Family family);

// Unit of parallel work. For all, the prefix is the whole second row; for
// ct111 it is P(3,2), P(4,2).
struct Partition {
  int id = 0;
  std::vector<int> prefix;
};

// Partitions in increasing id (and lexicographic prefix) order. Throws
// OrderTooSmall for n < 8 and PreconditionViolated for ct111 at even n.
std::vector<Partition> partitions(int n, Family family);

// Returning false from the visitor stops the enumeration.
using Visitor = std::function<bool(const PartialLatinSquare&)>;

// Emits the canonical squares of one partition in lexicographic order of
// columns 2-3 (row by row). Returns the number emitted.
std::uint64_t enumerate_partition(int n, Family family, const Partition& part, const Visitor& visit);
std::uint64_t enumerate(int n, Family family, const Visitor& visit);

struct VerifyOptions {
  int jobs = 1;
  // Appended to after each finished partition; partitions already listed are
  // skipped on start. Empty disables checkpointing.
  std::string checkpoint;
  // 0 runs the exhaustive enumeration. Otherwise this many random canonical
  // instances are drawn, in chunks of `chunk` that act as partitions.
  std::uint64_t samples = 0;
  std::uint64_t chunk = 1000;
  std::uint64_t seed = 1;
  SolverOptions solver;
  // Called after each finished partition with (done, total); serialized.
  std::function<void(int, int)> progress;
};

struct PartitionResult {
  int id = 0;
  std::uint64_t completable = 0;
  std::uint64_t total = 0;
};

struct SearchReport {
  int order = 0;
  Family family = Family::all;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t completable = 0;
  std::vector<PartialLatinSquare> witnesses;  // non-completable instances
  std::vector<PartitionResult> partitions;    // sorted by id
  // Run-local figures, not part of the resumable result.
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  int resumed = 0;

  bool consistent() const;
};

// Supported pairs: (8, all), (9, ct111), (11, ct111); anything else throws
// PreconditionViolated. A non-completable instance stops the run. A solver
// BudgetExceeded is rethrown once the workers have stopped; finished
// partitions stay in the checkpoint.
SearchReport verify_family(int n, Family family, const VerifyOptions& options = {});

// {"order", "family", "mode", "instances", "completable", "non_completable",
//  "witnesses": [grid...], "partitions", "run": {"seconds","nodes","resumed"}}
std::string report_to_json(const SearchReport& report);

enum class CorollaryPath { pipeline, oracle };

std::string_view to_string(CorollaryPath path);

struct CorollaryResult {
  // Exact-search completion of P itself.
  CompletionCertificate certificate;
  ReductionTrace trace;
  TerminalLabel label;
  CorollaryPath path = CorollaryPath::oracle;
  PartialLatinSquare terminal_completion;
  std::string pipeline_trace;  // trace_to_text of the construction, pipeline path only
};

// P in PLS(2,3;n) over [n], n >= 8, with a Latin rectangle as its 2x3
// corner. Reduces successively, completes the terminal square (construction
// for odd order >= 13, solver otherwise) and then searches a completion of P.
// Throws PreconditionViolated.
CorollaryResult complete_corollary(const PartialLatinSquare& p, const SolverOptions& options = {});

}  // namespace pls
