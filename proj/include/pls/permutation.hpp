#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace pls {

// A bijection on [n] = {1, ..., n}, stored by its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // images[i-1] = p(i)

  static Permutation identity(int n);
  // Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int n, std::initializer_list<std::vector<int>> cycles);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (*this * other)(i) = (*this)(other(i))
  Permutation operator*(const Permutation& other) const;
  bool is_identity() const;

  // Disjoint cycles, each starting at its least element, ordered by that
  // element. Fixed points are included as length-1 cycles.
  std::vector<std::vector<int>> cycles() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace pls
