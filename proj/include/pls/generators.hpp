#pragma once

#include <random>

#include "pls/cycle_type.hpp"
#include "pls/square.hpp"

namespace pls {

using Rng = std::mt19937_64;

// Latin square from a Jacobson-Matthews walk started at the cyclic square
// (n^2 steps plus a random isotopy).
PartialLatinSquare random_latin_square(int n, Rng& rng);

// random_latin_square with each cell kept with probability `keep`; always
// completable.
PartialLatinSquare random_completable_partial(int n, double keep, Rng& rng);

// Random member of PLS(2,3;n): uniform rows 1-2 with no column repeating a
// symbol, then columns 1-3 filled below by randomized matchings.
PartialLatinSquare random_band_square(int n, Rng& rng);

// Random member of PLS(2,3;n) whose (1,2)-row-permutation has the given cycle
// type; n is the total length of the type. The type must contain exactly
// three 1s and no fixed points (PreconditionViolated otherwise).
PartialLatinSquare random_with_cycle_type(const CycleType& type, Rng& rng);

// Random member of PLS(2,3;n) whose 2x3 corner is a Latin rectangle.
PartialLatinSquare random_latin_corner(int n, Rng& rng);

}  // namespace pls
