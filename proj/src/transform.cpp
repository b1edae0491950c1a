#include "pls/transform.hpp"

#include <algorithm>

#include "pls/error.hpp"

namespace pls {

std::string_view to_string(ConjugateKind kind) {
  switch (kind) {
    case ConjugateKind::rcs: return "rcs";
    case ConjugateKind::crs: return "crs";
    case ConjugateKind::scr: return "scr";
    case ConjugateKind::csr: return "csr";
    case ConjugateKind::rsc: return "rsc";
    case ConjugateKind::src: return "src";
  }
  return "?";
}

std::optional<ConjugateKind> parse_conjugate_kind(std::string_view text) {
  for (ConjugateKind k : kAllConjugates)
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::array<int, 3> coordinate_map(ConjugateKind kind) {
  switch (kind) {
    case ConjugateKind::rcs: return {0, 1, 2};
    case ConjugateKind::crs: return {1, 0, 2};
    case ConjugateKind::scr: return {2, 1, 0};
    case ConjugateKind::csr: return {1, 2, 0};
    case ConjugateKind::rsc: return {0, 2, 1};
    case ConjugateKind::src: return {2, 0, 1};
  }
  return {0, 1, 2};
}

namespace {

ConjugateKind kind_of(const std::array<int, 3>& map) {
  for (ConjugateKind k : kAllConjugates)
    if (coordinate_map(k) == map) return k;
  throw Error(ErrorCode::PreconditionViolated, "not a coordinate permutation");
}

}  // namespace

ConjugateKind compose(ConjugateKind first, ConjugateKind second) {
  const auto a = coordinate_map(first);
  const auto b = coordinate_map(second);
  std::array<int, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return kind_of(c);
}

ConjugateKind inverse(ConjugateKind kind) {
  for (ConjugateKind k : kAllConjugates)
    if (compose(kind, k) == ConjugateKind::rcs) return k;
  return ConjugateKind::rcs;
}

PartialLatinSquare conjugate(const PartialLatinSquare& p, ConjugateKind kind) {
  if (!p.has_standard_alphabet()) {
    throw Error(ErrorCode::PreconditionViolated, "conjugation needs the alphabet [n]");
  }
  const auto map = coordinate_map(kind);
  Grid g(p.order());
  for (const Triple& t : p.triples()) {
    const std::array<int, 3> src{t.row, t.col, t.symbol};
    g.at(src[static_cast<std::size_t>(map[0])], src[static_cast<std::size_t>(map[1])]) =
        src[static_cast<std::size_t>(map[2])];
  }
  return validate(std::move(g));
}

Isotopy Isotopy::identity(int n) {
  return {Permutation::identity(n), Permutation::identity(n), Permutation::identity(n)};
}

Isotopy Isotopy::inverse() const { return {rows.inverse(), cols.inverse(), symbols.inverse()}; }

Isotopy Isotopy::after(const Isotopy& first) const {
  return {rows * first.rows, cols * first.cols, symbols * first.symbols};
}

PartialLatinSquare apply_isotopy(const PartialLatinSquare& p, const Isotopy& iso) {
  const int n = p.order();
  if (iso.rows.size() != n || iso.cols.size() != n || iso.symbols.size() != n) {
    throw Error(ErrorCode::PermutationSizeMismatch,
                "isotopy of size " + std::to_string(iso.rows.size()) + " applied to order " +
                    std::to_string(n));
  }
  const auto& alphabet = p.alphabet();
  Grid g(n, alphabet);
  for (const Triple& t : p.triples()) {
    const int rank = p.rank_of(t.symbol) + 1;
    g.at(iso.rows(t.row), iso.cols(t.col)) = alphabet[static_cast<std::size_t>(iso.symbols(rank) - 1)];
  }
  return validate(std::move(g));
}

PartialLatinSquare relabel_symbols(const PartialLatinSquare& p, const std::map<int, int>& mapping) {
  auto image = [&](int s) {
    auto it = mapping.find(s);
    return it == mapping.end() ? s : it->second;
  };
  std::vector<int> alphabet;
  for (int s : p.alphabet()) alphabet.push_back(image(s));
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end()) {
    throw Error(ErrorCode::BadShape, "relabeling is not injective on the alphabet");
  }
  Grid g(p.order(), std::move(alphabet));
  for (const Triple& t : p.triples()) g.at(t.row, t.col) = image(t.symbol);
  return validate(std::move(g));
}

PartialLatinSquare apply(const PartialLatinSquare& p, const Transform& t) {
  if (const auto* iso = std::get_if<Isotopy>(&t)) return apply_isotopy(p, *iso);
  return conjugate(p, std::get<ConjugateKind>(t));
}

Transform inverse(const Transform& t) {
  if (const auto* iso = std::get_if<Isotopy>(&t)) return iso->inverse();
  return inverse(std::get<ConjugateKind>(t));
}

}  // namespace pls
