#include "pls/solver.hpp"

#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <string>

#include "pls/error.hpp"

namespace pls {

std::uint64_t SolverOptions::default_node_budget() {
  if (const char* env = std::getenv("PLS_BUDGET_NODES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 200'000'000ULL;
}

namespace {

using Mask = std::uint64_t;

class Engine {
 public:
  Engine(const PartialLatinSquare& p, const SolverOptions& options)
      : n_(p.order()),
        full_(n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1)),
        budget_(options.node_budget),
        row_used_(static_cast<std::size_t>(n_), 0),
        col_used_(static_cast<std::size_t>(n_), 0),
        forbid_(static_cast<std::size_t>(n_ * n_), 0),
        cells_(static_cast<std::size_t>(n_ * n_), -1),
        row_count_(static_cast<std::size_t>(n_ * n_), 0),
        col_count_(static_cast<std::size_t>(n_ * n_), 0),
        source_(p) {
    if (n_ > 64) throw Error(ErrorCode::PreconditionViolated, "solver supports order <= 64");
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        const int s = p.at(r + 1, c + 1);
        if (s != kEmpty) place(r, c, p.rank_of(s));
      }
    }
  }

  // Returns false when the constraint makes the instance infeasible outright.
  bool apply(const CellConstraint& constraint) {
    const int r = constraint.cell.row - 1;
    const int c = constraint.cell.col - 1;
    if (r < 0 || r >= n_ || c < 0 || c >= n_) {
      throw Error(ErrorCode::InconsistentConstraints, "constraint outside the array");
    }
    Mask symbols = 0;
    for (int s : constraint.symbols) {
      const int k = source_.rank_of(s);
      if (k < 0) throw Error(ErrorCode::InconsistentConstraints, "symbol outside the alphabet");
      symbols |= Mask{1} << k;
    }
    const std::size_t idx = index(r, c);
    if (constraint.kind == CellConstraint::Kind::forbidden) {
      if (cells_[idx] >= 0 && (symbols >> cells_[idx] & 1)) {
        throw Error(ErrorCode::InconsistentConstraints, "forbids the symbol of a filled cell");
      }
      forbid_[idx] |= symbols;
      return true;
    }
    if (constraint.symbols.size() != 1) {
      throw Error(ErrorCode::InconsistentConstraints, "forced constraint needs one symbol");
    }
    const int k = std::countr_zero(symbols);
    if (forbid_[idx] >> k & 1) throw Error(ErrorCode::InconsistentConstraints, "forced symbol is forbidden");
    if (cells_[idx] >= 0) {
      if (cells_[idx] != k) {
        throw Error(ErrorCode::InconsistentConstraints, "conflicts with a filled cell");
      }
      return true;
    }
    if (((row_used_[static_cast<std::size_t>(r)] | col_used_[static_cast<std::size_t>(c)]) >> k) & 1) {
      return false;
    }
    place(r, c, k);
    return true;
  }

  // After all constraints are in: a forbidden mask may clash with a later
  // forced symbol on the same cell.
  void check_forced_against_forbidden() const {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i] >= 0 && (forbid_[i] >> cells_[i] & 1)) {
        throw Error(ErrorCode::InconsistentConstraints, "forced symbol is forbidden");
      }
    }
  }

  bool find_first() {
    mode_ = Mode::first;
    return search();
  }

  std::uint64_t count(std::uint64_t cap) {
    mode_ = Mode::count;
    cap_ = cap;
    search();
    return found_;
  }

  std::uint64_t nodes() const { return nodes_; }

  PartialLatinSquare witness() const {
    Grid g(n_, source_.alphabet());
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        g.at(r + 1, c + 1) = source_.alphabet()[static_cast<std::size_t>(solution_[index(r, c)])];
    return validate(std::move(g));
  }

 private:
  enum class Mode { first, count };
  enum class Unit { cell, row, col };

  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * n_ + c); }

  void place(int r, int c, int k) {
    cells_[index(r, c)] = k;
    row_used_[static_cast<std::size_t>(r)] |= Mask{1} << k;
    col_used_[static_cast<std::size_t>(c)] |= Mask{1} << k;
    ++filled_;
  }

  void unplace(int r, int c, int k) {
    cells_[index(r, c)] = -1;
    row_used_[static_cast<std::size_t>(r)] &= ~(Mask{1} << k);
    col_used_[static_cast<std::size_t>(c)] &= ~(Mask{1} << k);
    --filled_;
  }

  Mask candidates(int r, int c) const {
    return full_ & ~(row_used_[static_cast<std::size_t>(r)] | col_used_[static_cast<std::size_t>(c)] |
                     forbid_[index(r, c)]);
  }

  // True when the caller should stop (first solution found or cap reached).
  bool search() {
    if (filled_ == n_ * n_) {
      if (mode_ == Mode::first) {
        solution_ = cells_;
        return true;
      }
      ++found_;
      return found_ >= cap_;
    }
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(budget_) + " exhausted");
    }

    std::fill(row_count_.begin(), row_count_.end(), 0);
    std::fill(col_count_.begin(), col_count_.end(), 0);
    int best = std::numeric_limits<int>::max();
    Unit unit = Unit::cell;
    int best_a = -1;
    int best_b = -1;
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        if (cells_[index(r, c)] >= 0) continue;
        Mask cand = candidates(r, c);
        const int cnt = std::popcount(cand);
        if (cnt == 0) return false;
        if (cnt < best) {
          best = cnt;
          unit = Unit::cell;
          best_a = r;
          best_b = c;
        }
        while (cand) {
          const int k = std::countr_zero(cand);
          cand &= cand - 1;
          ++row_count_[index(r, k)];
          ++col_count_[index(c, k)];
        }
      }
    }
    for (int r = 0; r < n_; ++r) {
      Mask missing = full_ & ~row_used_[static_cast<std::size_t>(r)];
      while (missing) {
        const int k = std::countr_zero(missing);
        missing &= missing - 1;
        const int cnt = row_count_[index(r, k)];
        if (cnt == 0) return false;
        if (cnt < best) {
          best = cnt;
          unit = Unit::row;
          best_a = r;
          best_b = k;
        }
      }
    }
    for (int c = 0; c < n_; ++c) {
      Mask missing = full_ & ~col_used_[static_cast<std::size_t>(c)];
      while (missing) {
        const int k = std::countr_zero(missing);
        missing &= missing - 1;
        const int cnt = col_count_[index(c, k)];
        if (cnt == 0) return false;
        if (cnt < best) {
          best = cnt;
          unit = Unit::col;
          best_a = c;
          best_b = k;
        }
      }
    }

    if (unit == Unit::cell) {
      const int r = best_a;
      const int c = best_b;
      Mask cand = candidates(r, c);
      while (cand) {
        const int k = std::countr_zero(cand);
        cand &= cand - 1;
        place(r, c, k);
        const bool stop = search();
        unplace(r, c, k);
        if (stop) return true;
      }
      return false;
    }

    const int k = best_b;
    const Mask bit = Mask{1} << k;
    for (int other = 0; other < n_; ++other) {
      const int r = unit == Unit::row ? best_a : other;
      const int c = unit == Unit::row ? other : best_a;
      if (cells_[index(r, c)] >= 0 || !(candidates(r, c) & bit)) continue;
      place(r, c, k);
      const bool stop = search();
      unplace(r, c, k);
      if (stop) return true;
    }
    return false;
  }

  int n_;
  Mask full_;
  std::uint64_t budget_;
  std::vector<Mask> row_used_;
  std::vector<Mask> col_used_;
  std::vector<Mask> forbid_;
  std::vector<int> cells_;
  std::vector<int> row_count_;  // [row][symbol] open cells
  std::vector<int> col_count_;  // [col][symbol] open cells
  std::vector<int> solution_;
  const PartialLatinSquare& source_;
  int filled_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  std::uint64_t cap_ = 0;
  Mode mode_ = Mode::first;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CompletionCertificate is_completable(const PartialLatinSquare& p, const SolverOptions& options) {
  return complete_with_constraints(p, {}, options);
}

std::uint64_t count_completions(const PartialLatinSquare& p, std::uint64_t cap,
                                const SolverOptions& options) {
  if (cap == 0) return 0;
  Engine engine(p, options);
  return engine.count(cap);
}

CompletionCertificate complete_with_constraints(const PartialLatinSquare& p,
                                                std::span<const CellConstraint> constraints,
                                                const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Engine engine(p, options);
  CompletionCertificate cert;
  bool feasible = true;
  for (const CellConstraint& constraint : constraints) feasible = engine.apply(constraint) && feasible;
  engine.check_forced_against_forbidden();
  if (feasible && engine.find_first()) {
    cert.verdict = Verdict::completable;
    cert.witness = engine.witness();
  }
  cert.stats = {engine.nodes(), seconds_since(start)};
  return cert;
}

}  // namespace pls
