#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pls/permutation.hpp"
#include "pls/square.hpp"

namespace pls {

// The (r1, r2)-row-permutation: sigma(P(r1, i)) = P(r2, i), acting on alphabet
// ranks (1-based). Throws RowNotFull.
Permutation row_permutation(const PartialLatinSquare& p, int r1, int r2);

// Lexicographically least rotation of a 0/1 word.
std::string canonical_rotation(std::string_view bits);

// Multiset of cycle words up to rotation. Entries are kept sorted by word, so
// two cycle types are equivalent exactly when they compare equal.
class CycleType {
 public:
  struct Entry {
    std::string word;  // canonical rotation
    int multiplicity = 0;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  CycleType() = default;
  // Words need not be canonical; repeated words are merged.
  explicit CycleType(const std::vector<std::pair<std::string, int>>& entries);
  // Parses "{(111,1),(00,5)}".
  static CycleType parse(std::string_view text);

  const std::vector<Entry>& entries() const { return entries_; }
  int multiplicity(std::string_view word) const;
  // Sum of word length times multiplicity.
  int total_length() const;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<Entry> entries_;
};

// Cycle type of the (1,2)-row-permutation of P in PLS(2,b;n): bit i of a cycle
// is 1 iff its i-th symbol lies in the upper-left 1 x b subarray.
// Throws NotNormalForm unless P is in PLS(2,b;n) layout.
CycleType cycle_type(const PartialLatinSquare& p, int filled_cols = 3);

}  // namespace pls
