#pragma once

#include "hopfren/laurent.hpp"

#include <random>

namespace hopfren {

using Rng = std::mt19937_64;

// p/q with |p| <= 9 and 1 <= q <= 9.
Rational small_rational(Rng &rng);

// Up to `terms` terms a^i b^k with i, k <= max_exp; with_b = false keeps it in a alone.
Polynomial random_polynomial(Rng &rng, int terms, unsigned max_exp, bool with_b = true);

// Exact Laurent polynomial with coefficients at powers min_pow..max_pow,
// each present with probability 3/4.
LaurentSeries random_series(Rng &rng, int min_pow, int max_pow, bool with_b = true);

} // namespace hopfren
