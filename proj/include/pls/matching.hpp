#pragma once

#include <vector>

#include "pls/error.hpp"
#include "pls/square.hpp"

namespace pls {

// Bipartite graph with 0-based parts V1 = {0..left-1}, V2 = {0..right-1}.
class BipartiteGraph {
 public:
  BipartiteGraph(int left, int right);

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  // Ascending.
  const std::vector<int>& neighbours(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  int left_size() const { return left_; }
  int right_size() const { return right_; }
  int min_degree() const;

 private:
  int left_;
  int right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> right_degree_;
};

// left_to_right[u] is the partner of u, or -1.
struct Matching {
  std::vector<int> left_to_right;
  int size() const;
};

// Augmenting paths after a greedy start; neighbours are tried lowest index
// first so results are reproducible.
Matching maximum_matching(const BipartiteGraph& graph);

class NoPerfectMatchingError : public Error {
 public:
  explicit NoPerfectMatchingError(std::vector<int> violator);
  // S within V1 with |N(S)| < |S|.
  const std::vector<int>& violator() const { return violator_; }

 private:
  std::vector<int> violator_;
};

// Throws PreconditionViolated for unbalanced graphs and NoPerfectMatchingError
// (carrying a Hall violator) when no perfect matching exists.
Matching perfect_matching(const BipartiteGraph& graph);

// Completion of a square whose filled cells are exactly some full columns.
// Empty columns are filled left to right, each by a perfect matching between
// rows and the symbols they still miss.
PartialLatinSquare complete_filled_columns(const PartialLatinSquare& p);

// Completion of a square with r full columns, one column holding s entries
// and nothing else, provided n >= 2r + s. The partial column is finished with
// a matching between its empty rows and its missing symbols, then the rest is
// left to complete_filled_columns.
PartialLatinSquare complete_columns_plus_partial(const PartialLatinSquare& p);

// Ryser's condition for an r x s Latin rectangle Q over [n]: each symbol occurs
// at least r + s - n times. Throws BadShape for ragged, oversized or non-Latin Q.
bool ryser_condition(const std::vector<std::vector<int>>& rectangle, int n);

}  // namespace pls
