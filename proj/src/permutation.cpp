#include "pls/permutation.hpp"

#include <sstream>

#include "pls/error.hpp"

namespace pls {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::PermutationSizeMismatch, "image list is not a bijection on [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::initializer_list<std::vector<int>> cycles) {
  Permutation result = identity(n);
  for (const auto& cycle : cycles) {
    std::vector<int> images = identity(n).images();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n) throw Error(ErrorCode::IndexOutOfRange, "cycle element");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

Permutation Permutation::transposition(int n, int a, int b) {
  std::vector<int> images = identity(n).images();
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) {
    throw Error(ErrorCode::PermutationSizeMismatch, "composing permutations of different size");
  }
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace pls
