#include "pls/generators.hpp"

#include <algorithm>
#include <numeric>

#include "pls/error.hpp"
#include "pls/matching.hpp"

namespace pls {

namespace {

std::vector<int> shuffled_range(int n, Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Incidence cube walk. cube[r][c][s] in {-1, 0, 1}; at most one -1 cell.
class JacobsonMatthews {
 public:
  explicit JacobsonMatthews(int n) : n_(n), cube_(static_cast<std::size_t>(n * n * n), 0) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) at(r, c, (r + c) % n) = 1;
  }

  void step(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    int r, c, s;
    if (!improper_) {
      // Any cell with a 0 entry.
      do {
        r = pick(rng);
        c = pick(rng);
        s = pick(rng);
      } while (at(r, c, s) != 0);
    } else {
      r = ir_;
      c = ic_;
      s = is_;
    }
    const int r2 = choose_positive_row(c, s, rng);
    const int c2 = choose_positive_col(r, s, rng);
    const int s2 = choose_positive_sym(r, c, rng);
    at(r, c, s) += 1;
    at(r, c2, s2) += 1;
    at(r2, c, s2) += 1;
    at(r2, c2, s) += 1;
    at(r, c, s2) -= 1;
    at(r, c2, s) -= 1;
    at(r2, c, s) -= 1;
    at(r2, c2, s2) -= 1;
    improper_ = at(r2, c2, s2) < 0;
    if (improper_) {
      ir_ = r2;
      ic_ = c2;
      is_ = s2;
    }
  }

  bool proper() const { return !improper_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        for (int s = 0; s < n_; ++s)
          if (at(r, c, s) == 1) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s + 1;
    return out;
  }

 private:
  int& at(int r, int c, int s) { return cube_[static_cast<std::size_t>((r * n_ + c) * n_ + s)]; }
  int at(int r, int c, int s) const { return cube_[static_cast<std::size_t>((r * n_ + c) * n_ + s)]; }

  // When improper there are two positive choices along each line; pick one.
  template <typename F>
  int choose(F value, Rng& rng) const {
    int found[2] = {-1, -1};
    int count = 0;
    for (int x = 0; x < n_; ++x)
      if (value(x) == 1 && count < 2) found[count++] = x;
    if (count == 1) return found[0];
    return found[std::uniform_int_distribution<int>(0, 1)(rng)];
  }
  int choose_positive_row(int c, int s, Rng& rng) const {
    return choose([&](int x) { return at(x, c, s); }, rng);
  }
  int choose_positive_col(int r, int s, Rng& rng) const {
    return choose([&](int x) { return at(r, x, s); }, rng);
  }
  int choose_positive_sym(int r, int c, Rng& rng) const {
    return choose([&](int x) { return at(r, c, x); }, rng);
  }

  int n_;
  std::vector<int> cube_;
  bool improper_ = false;
  int ir_ = 0, ic_ = 0, is_ = 0;
};

// Fills columns 1..3 of rows 3..n, given full rows 1 and 2. Returns false if
// a randomized matching fails (rare); the caller retries.
bool fill_band_columns(Grid& g, Rng& rng) {
  const int n = g.n;
  for (int c = 1; c <= 3; ++c) {
    std::vector<int> missing;
    for (int s = 1; s <= n; ++s)
      if (g.at(1, c) != s && g.at(2, c) != s) missing.push_back(s);
    std::shuffle(missing.begin(), missing.end(), rng);
    std::vector<int> rows(static_cast<std::size_t>(n - 2));
    std::iota(rows.begin(), rows.end(), 3);
    std::shuffle(rows.begin(), rows.end(), rng);
    BipartiteGraph graph(n - 2, n - 2);
    for (int i = 0; i < n - 2; ++i) {
      const int r = rows[static_cast<std::size_t>(i)];
      for (int j = 0; j < n - 2; ++j) {
        const int s = missing[static_cast<std::size_t>(j)];
        bool ok = true;
        for (int c2 = 1; c2 < c; ++c2) ok = ok && g.at(r, c2) != s;
        if (ok) graph.add_edge(i, j);
      }
    }
    const Matching m = maximum_matching(graph);
    if (m.size() != n - 2) return false;
    for (int i = 0; i < n - 2; ++i) {
      g.at(rows[static_cast<std::size_t>(i)], c) =
          missing[static_cast<std::size_t>(m.left_to_right[static_cast<std::size_t>(i)])];
    }
  }
  return true;
}

// Rows 1-2 from a permutation sigma of [n] (no fixed points) and a row 1
// whose first three entries are given.
PartialLatinSquare band_from_rows(const std::vector<int>& row1, const std::vector<int>& sigma, Rng& rng) {
  const int n = static_cast<int>(row1.size());
  for (int attempt = 0;; ++attempt) {
    Grid g(n);
    for (int c = 1; c <= n; ++c) {
      g.at(1, c) = row1[static_cast<std::size_t>(c - 1)];
      g.at(2, c) = sigma[static_cast<std::size_t>(g.at(1, c) - 1)];
    }
    if (fill_band_columns(g, rng)) return validate(std::move(g));
    if (attempt > 1000) throw Error(ErrorCode::PreconditionViolated, "could not fill the band columns");
  }
}

}  // namespace

PartialLatinSquare random_latin_square(int n, Rng& rng) {
  JacobsonMatthews walk(n);
  // Below order 3 the isotopy alone reaches every Latin square.
  if (n >= 3)
    for (long i = 0; i < static_cast<long>(n) * n || !walk.proper(); ++i) walk.step(rng);
  auto rows = walk.rows();
  const auto pr = shuffled_range(n, rng);
  const auto pc = shuffled_range(n, rng);
  const auto ps = shuffled_range(n, rng);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[static_cast<std::size_t>(pr[static_cast<std::size_t>(r)] - 1)][static_cast<std::size_t>(pc[static_cast<std::size_t>(c)] - 1)] =
          ps[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - 1)];
  return PartialLatinSquare::from_rows(out);
}

PartialLatinSquare random_completable_partial(int n, double keep, Rng& rng) {
  const PartialLatinSquare full = random_latin_square(n, rng);
  std::bernoulli_distribution coin(keep);
  Grid g = full.grid();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (!coin(rng)) g.at(r, c) = kEmpty;
  return validate(std::move(g));
}

PartialLatinSquare random_band_square(int n, Rng& rng) {
  if (n < 4) throw Error(ErrorCode::OrderTooSmall, "PLS(2,3;n) needs n >= 4");
  // sigma uniform among derangements by rejection.
  std::vector<int> sigma;
  for (;;) {
    sigma = shuffled_range(n, rng);
    bool fixed = false;
    for (int i = 1; i <= n; ++i) fixed = fixed || sigma[static_cast<std::size_t>(i - 1)] == i;
    if (!fixed) break;
  }
  return band_from_rows(shuffled_range(n, rng), sigma, rng);
}

PartialLatinSquare random_with_cycle_type(const CycleType& type, Rng& rng) {
  const int n = type.total_length();
  int ones = 0;
  std::vector<std::string> words;
  for (const auto& e : type.entries()) {
    if (e.word.size() < 2) throw Error(ErrorCode::PreconditionViolated, "fixed points cannot occur");
    for (int m = 0; m < e.multiplicity; ++m) {
      words.push_back(e.word);
      ones += static_cast<int>(std::count(e.word.begin(), e.word.end(), '1'));
    }
  }
  if (ones != 3) throw Error(ErrorCode::PreconditionViolated, "a cycle type of PLS(2,3;n) has three 1s");
  if (n < 4) throw Error(ErrorCode::OrderTooSmall, "PLS(2,3;n) needs n >= 4");
  std::shuffle(words.begin(), words.end(), rng);
  const auto symbols = shuffled_range(n, rng);
  std::vector<int> corner(symbols.begin(), symbols.begin() + 3);
  std::vector<int> rest(symbols.begin() + 3, symbols.end());
  std::size_t next_corner = 0, next_rest = 0;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (const std::string& w : words) {
    // Random rotation so the cycle does not always start at the same bit.
    const std::size_t shift = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng);
    std::vector<int> cycle;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const char bit = w[(i + shift) % w.size()];
      cycle.push_back(bit == '1' ? corner[next_corner++] : rest[next_rest++]);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      sigma[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  std::vector<int> row1 = corner;
  row1.insert(row1.end(), rest.begin(), rest.end());
  return band_from_rows(row1, sigma, rng);
}

PartialLatinSquare random_latin_corner(int n, Rng& rng) {
  if (n < 5) throw Error(ErrorCode::OrderTooSmall, "needs n >= 5");
  const auto symbols = shuffled_range(n, rng);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  // The corner symbols form a 3-cycle; the others any derangement.
  sigma[static_cast<std::size_t>(symbols[0] - 1)] = symbols[1];
  sigma[static_cast<std::size_t>(symbols[1] - 1)] = symbols[2];
  sigma[static_cast<std::size_t>(symbols[2] - 1)] = symbols[0];
  std::vector<int> rest(symbols.begin() + 3, symbols.end());
  for (;;) {
    std::vector<int> image = rest;
    std::shuffle(image.begin(), image.end(), rng);
    bool fixed = false;
    for (std::size_t i = 0; i < rest.size(); ++i) fixed = fixed || image[i] == rest[i];
    if (fixed) continue;
    for (std::size_t i = 0; i < rest.size(); ++i) sigma[static_cast<std::size_t>(rest[i] - 1)] = image[i];
    break;
  }
  std::vector<int> row1(symbols.begin(), symbols.begin() + 3);
  std::shuffle(rest.begin(), rest.end(), rng);
  row1.insert(row1.end(), rest.begin(), rest.end());
  return band_from_rows(row1, sigma, rng);
}

}  // namespace pls
