#include "pls/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pls {

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_(left),
      right_(right),
      adj_(static_cast<std::size_t>(left)),
      right_degree_(static_cast<std::size_t>(right), 0) {}

void BipartiteGraph::add_edge(int u, int v) {
  if (u < 0 || u >= left_ || v < 0 || v >= right_) {
    throw Error(ErrorCode::IndexOutOfRange, "edge endpoint outside its part");
  }
  auto& list = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return;
  list.insert(it, v);
  ++right_degree_[static_cast<std::size_t>(v)];
}

bool BipartiteGraph::adjacent(int u, int v) const {
  const auto& list = neighbours(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int BipartiteGraph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  for (int d : right_degree_) best = std::min(best, d);
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

int Matching::size() const {
  return static_cast<int>(std::count_if(left_to_right.begin(), left_to_right.end(),
                                        [](int v) { return v >= 0; }));
}

namespace {

bool augment(const BipartiteGraph& g, int u, std::vector<int>& l2r, std::vector<int>& r2l,
             std::vector<char>& visited) {
  for (int v : g.neighbours(u)) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    visited[static_cast<std::size_t>(v)] = 1;
    const int owner = r2l[static_cast<std::size_t>(v)];
    if (owner < 0 || augment(g, owner, l2r, r2l, visited)) {
      l2r[static_cast<std::size_t>(u)] = v;
      r2l[static_cast<std::size_t>(v)] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  std::vector<int> l2r(static_cast<std::size_t>(g.left_size()), -1);
  std::vector<int> r2l(static_cast<std::size_t>(g.right_size()), -1);
  for (int u = 0; u < g.left_size(); ++u) {
    for (int v : g.neighbours(u)) {
      if (r2l[static_cast<std::size_t>(v)] < 0) {
        l2r[static_cast<std::size_t>(u)] = v;
        r2l[static_cast<std::size_t>(v)] = u;
        break;
      }
    }
  }
  std::vector<char> visited(static_cast<std::size_t>(g.right_size()));
  for (int u = 0; u < g.left_size(); ++u) {
    if (l2r[static_cast<std::size_t>(u)] >= 0) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(g, u, l2r, r2l, visited);
  }
  return {std::move(l2r)};
}

NoPerfectMatchingError::NoPerfectMatchingError(std::vector<int> violator)
    : Error(ErrorCode::NoPerfectMatching,
            "Hall violator of size " + std::to_string(violator.size())),
      violator_(std::move(violator)) {}

Matching perfect_matching(const BipartiteGraph& g) {
  if (g.left_size() != g.right_size()) {
    throw Error(ErrorCode::PreconditionViolated, "perfect matching needs a balanced graph");
  }
  Matching m = maximum_matching(g);
  const auto root = std::find(m.left_to_right.begin(), m.left_to_right.end(), -1);
  if (root == m.left_to_right.end()) return m;

  // Left vertices reachable from an exposed vertex by alternating paths have
  // only matched neighbours, one fewer than themselves.
  std::vector<int> r2l(static_cast<std::size_t>(g.right_size()), -1);
  for (int u = 0; u < g.left_size(); ++u)
    if (m.left_to_right[static_cast<std::size_t>(u)] >= 0)
      r2l[static_cast<std::size_t>(m.left_to_right[static_cast<std::size_t>(u)])] = u;
  std::vector<char> in_s(static_cast<std::size_t>(g.left_size()), 0);
  std::vector<char> seen_right(static_cast<std::size_t>(g.right_size()), 0);
  std::queue<int> queue;
  const int start = static_cast<int>(root - m.left_to_right.begin());
  in_s[static_cast<std::size_t>(start)] = 1;
  queue.push(start);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : g.neighbours(u)) {
      if (seen_right[static_cast<std::size_t>(v)]) continue;
      seen_right[static_cast<std::size_t>(v)] = 1;
      const int w = r2l[static_cast<std::size_t>(v)];
      if (w >= 0 && !in_s[static_cast<std::size_t>(w)]) {
        in_s[static_cast<std::size_t>(w)] = 1;
        queue.push(w);
      }
    }
  }
  std::vector<int> violator;
  for (int u = 0; u < g.left_size(); ++u)
    if (in_s[static_cast<std::size_t>(u)]) violator.push_back(u);
  throw NoPerfectMatchingError(std::move(violator));
}

namespace {

struct ColumnCensus {
  std::vector<int> full;
  std::vector<int> partial;
  std::vector<int> empty;
};

ColumnCensus census(const PartialLatinSquare& p) {
  ColumnCensus out;
  const int n = p.order();
  for (int c = 1; c <= n; ++c) {
    int count = 0;
    for (int r = 1; r <= n; ++r) count += p.filled(r, c) ? 1 : 0;
    if (count == n) {
      out.full.push_back(c);
    } else if (count == 0) {
      out.empty.push_back(c);
    } else {
      out.partial.push_back(c);
    }
  }
  return out;
}

std::vector<char> row_symbols(const PartialLatinSquare& p, const Grid& g, int r) {
  std::vector<char> used(static_cast<std::size_t>(p.order()), 0);
  for (int c = 1; c <= p.order(); ++c)
    if (g.at(r, c) != kEmpty) used[static_cast<std::size_t>(p.rank_of(g.at(r, c)))] = 1;
  return used;
}

}  // namespace

PartialLatinSquare complete_filled_columns(const PartialLatinSquare& p) {
  const ColumnCensus cols = census(p);
  if (!cols.partial.empty()) {
    throw Error(ErrorCode::PreconditionViolated,
                "column " + std::to_string(cols.partial.front()) + " is partially filled");
  }
  const int n = p.order();
  Grid g = p.grid();
  for (int c : cols.empty) {
    BipartiteGraph graph(n, n);
    for (int r = 1; r <= n; ++r) {
      const auto used = row_symbols(p, g, r);
      for (int k = 0; k < n; ++k)
        if (!used[static_cast<std::size_t>(k)]) graph.add_edge(r - 1, k);
    }
    // The row/symbol graph is (n - filled)-regular, so this cannot fail.
    const Matching m = perfect_matching(graph);
    for (int r = 1; r <= n; ++r) {
      g.at(r, c) = p.alphabet()[static_cast<std::size_t>(m.left_to_right[static_cast<std::size_t>(r - 1)])];
    }
  }
  return validate(std::move(g));
}

PartialLatinSquare complete_columns_plus_partial(const PartialLatinSquare& p) {
  const ColumnCensus cols = census(p);
  if (cols.partial.size() > 1) {
    throw Error(ErrorCode::PreconditionViolated, "more than one partially filled column");
  }
  if (cols.partial.empty()) return complete_filled_columns(p);

  const int n = p.order();
  const int r = static_cast<int>(cols.full.size());
  const int c = cols.partial.front();
  int s = 0;
  for (int row = 1; row <= n; ++row) s += p.filled(row, c) ? 1 : 0;
  if (n < 2 * r + s) {
    throw Error(ErrorCode::PreconditionViolated,
                "n = " + std::to_string(n) + " < 2r + s = " + std::to_string(2 * r + s));
  }

  std::vector<int> open_rows;
  for (int row = 1; row <= n; ++row)
    if (!p.filled(row, c)) open_rows.push_back(row);
  std::vector<char> in_column(static_cast<std::size_t>(n), 0);
  for (int row = 1; row <= n; ++row)
    if (p.filled(row, c)) in_column[static_cast<std::size_t>(p.rank_of(p.at(row, c)))] = 1;
  std::vector<int> missing;
  for (int k = 0; k < n; ++k)
    if (!in_column[static_cast<std::size_t>(k)]) missing.push_back(k);

  const int m = n - s;
  BipartiteGraph graph(m, m);
  for (int i = 0; i < m; ++i) {
    const auto used = row_symbols(p, p.grid(), open_rows[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j)
      if (!used[static_cast<std::size_t>(missing[static_cast<std::size_t>(j)])]) graph.add_edge(i, j);
  }
  Matching matching;
  try {
    matching = perfect_matching(graph);
  } catch (const NoPerfectMatchingError& e) {
    throw Error(ErrorCode::InternalMatchingFailure, e.what());
  }
  Grid g = p.grid();
  for (int i = 0; i < m; ++i) {
    const int k = missing[static_cast<std::size_t>(matching.left_to_right[static_cast<std::size_t>(i)])];
    g.at(open_rows[static_cast<std::size_t>(i)], c) = p.alphabet()[static_cast<std::size_t>(k)];
  }
  return complete_filled_columns(validate(std::move(g)));
}

bool ryser_condition(const std::vector<std::vector<int>>& rectangle, int n) {
  const int r = static_cast<int>(rectangle.size());
  if (r == 0 || r > n) throw Error(ErrorCode::BadShape, "rectangle height outside [1, n]");
  const int s = static_cast<int>(rectangle.front().size());
  if (s == 0 || s > n) throw Error(ErrorCode::BadShape, "rectangle width outside [1, n]");
  Grid g(n);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rectangle[static_cast<std::size_t>(i)].size()) != s) {
      throw Error(ErrorCode::BadShape, "ragged rectangle");
    }
    for (int j = 0; j < s; ++j) {
      const int v = rectangle[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 1 || v > n) throw Error(ErrorCode::BadShape, "entry outside [n] or empty");
      g.at(i + 1, j + 1) = v;
    }
  }
  try {
    validate(std::move(g));
  } catch (const DuplicateError& e) {
    throw Error(ErrorCode::BadShape, std::string("not a Latin rectangle: ") + e.what());
  }
  std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
  for (const auto& row : rectangle)
    for (int v : row) ++occurrences[static_cast<std::size_t>(v - 1)];
  const int threshold = r + s - n;
  return std::all_of(occurrences.begin(), occurrences.end(), [threshold](int k) { return k >= threshold; });
}

}  // namespace pls
