#include "pls/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pls/error.hpp"

namespace pls {

Permutation row_permutation(const PartialLatinSquare& p, int r1, int r2) {
  const int n = p.order();
  if (r1 < 1 || r1 > n || r2 < 1 || r2 > n) throw Error(ErrorCode::IndexOutOfRange, "row index");
  for (int r : {r1, r2})
    for (int c = 1; c <= n; ++c)
      if (!p.filled(r, c)) throw Error(ErrorCode::RowNotFull, "row " + std::to_string(r));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) {
    images[static_cast<std::size_t>(p.rank_of(p.at(r1, c)))] = p.rank_of(p.at(r2, c)) + 1;
  }
  return Permutation(std::move(images));
}

std::string canonical_rotation(std::string_view bits) {
  std::string best(bits);
  std::string rotated(bits);
  for (std::size_t i = 1; i < bits.size(); ++i) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    best = std::min(best, rotated);
  }
  return best;
}

CycleType::CycleType(const std::vector<std::pair<std::string, int>>& entries) {
  std::map<std::string, int> merged;
  for (const auto& [word, mult] : entries) {
    if (word.empty() || mult < 1 ||
        word.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::BadShape, "cycle type entry (" + word + "," + std::to_string(mult) + ")");
    }
    merged[canonical_rotation(word)] += mult;
  }
  for (auto& [word, mult] : merged) entries_.push_back({word, mult});
}

CycleType CycleType::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw Error(ErrorCode::BadShape, "cycle type must be enclosed in braces");
  }
  std::vector<std::pair<std::string, int>> entries;
  std::size_t pos = 1;
  while (pos < compact.size() - 1) {
    if (compact[pos] == ',') {
      ++pos;
      continue;
    }
    const std::size_t close = compact.find(')', pos);
    const std::size_t comma = compact.find(',', pos);
    if (compact[pos] != '(' || close == std::string::npos || comma == std::string::npos ||
        comma > close) {
      throw Error(ErrorCode::BadShape, "malformed cycle type entry");
    }
    std::string word = compact.substr(pos + 1, comma - pos - 1);
    int mult = 0;
    try {
      mult = std::stoi(compact.substr(comma + 1, close - comma - 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadShape, "malformed multiplicity");
    }
    entries.emplace_back(std::move(word), mult);
    pos = close + 1;
  }
  return CycleType(entries);
}

int CycleType::multiplicity(std::string_view word) const {
  const std::string key = canonical_rotation(word);
  for (const Entry& e : entries_)
    if (e.word == key) return e.multiplicity;
  return 0;
}

int CycleType::total_length() const {
  int total = 0;
  for (const Entry& e : entries_) total += static_cast<int>(e.word.size()) * e.multiplicity;
  return total;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    os << (i ? "," : "") << '(' << entries_[i].word << ',' << entries_[i].multiplicity << ')';
  }
  os << '}';
  return os.str();
}

CycleType cycle_type(const PartialLatinSquare& p, int filled_cols) {
  if (!in_band_form(p, 2, filled_cols)) {
    throw Error(ErrorCode::NotNormalForm,
                "expected rows 1-2 and columns 1-" + std::to_string(filled_cols) +
                    " filled and nothing else");
  }
  const Permutation sigma = row_permutation(p, 1, 2);
  std::vector<char> in_corner(static_cast<std::size_t>(p.order()), 0);
  for (int c = 1; c <= filled_cols; ++c) in_corner[static_cast<std::size_t>(p.rank_of(p.at(1, c)))] = 1;

  std::vector<std::pair<std::string, int>> words;
  for (const auto& cycle : sigma.cycles()) {
    std::string word;
    for (int x : cycle) word.push_back(in_corner[static_cast<std::size_t>(x - 1)] ? '1' : '0');
    words.emplace_back(std::move(word), 1);
  }
  return CycleType(words);
}

}  // namespace pls
