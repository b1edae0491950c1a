#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <variant>

#include "pls/permutation.hpp"
#include "pls/square.hpp"

namespace pls {

// The six uniform permutations of the (row, column, symbol) coordinates. The
// tag names which original coordinate lands in the new row, column and symbol
// slot: scr maps (r, c, s) to (s, c, r).
enum class ConjugateKind { rcs, crs, scr, csr, rsc, src };

inline constexpr std::array<ConjugateKind, 6> kAllConjugates = {
    ConjugateKind::rcs, ConjugateKind::crs, ConjugateKind::scr,
    ConjugateKind::csr, ConjugateKind::rsc, ConjugateKind::src};

std::string_view to_string(ConjugateKind kind);
std::optional<ConjugateKind> parse_conjugate_kind(std::string_view text);

// Source coordinate (0 = row, 1 = column, 2 = symbol) for each target slot.
std::array<int, 3> coordinate_map(ConjugateKind kind);
// conjugate(conjugate(P, first), second) == conjugate(P, compose(first, second))
ConjugateKind compose(ConjugateKind first, ConjugateKind second);
ConjugateKind inverse(ConjugateKind kind);

// Requires the standard alphabet [n]; throws PreconditionViolated otherwise.
PartialLatinSquare conjugate(const PartialLatinSquare& p, ConjugateKind kind);

// Independent row, column and symbol permutations. The symbol permutation acts
// on alphabet ranks, so it coincides with a permutation of [n] for the
// standard alphabet.
struct Isotopy {
  Permutation rows;
  Permutation cols;
  Permutation symbols;

  static Isotopy identity(int n);
  Isotopy inverse() const;
  // Apply `first`, then `*this`.
  Isotopy after(const Isotopy& first) const;
  friend bool operator==(const Isotopy&, const Isotopy&) = default;
};

// Filled cell (r, c, s) moves to (rows(r), cols(c), symbols(s)).
PartialLatinSquare apply_isotopy(const PartialLatinSquare& p, const Isotopy& iso);

// Renames symbols through `mapping` (old -> new); unmapped symbols are kept.
// The resulting alphabet is the image of the old one.
PartialLatinSquare relabel_symbols(const PartialLatinSquare& p, const std::map<int, int>& mapping);

// A reversible step in a chain of equivalences between squares.
using Transform = std::variant<Isotopy, ConjugateKind>;

PartialLatinSquare apply(const PartialLatinSquare& p, const Transform& t);
Transform inverse(const Transform& t);

}  // namespace pls
