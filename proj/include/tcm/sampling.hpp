#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tcm/algebra.hpp"
#include "tcm/series.hpp"

/// Seeded random elements for sampled checks. Only `rng() % n` is used, so
/// draws are identical across standard library implementations.
namespace tcm::sampling {

using Rng = std::mt19937_64;

std::uint64_t below(Rng &rng, std::uint64_t n);

Element element(Rng &rng, const FiniteAbelianGroup &g);
Pair pair(Rng &rng, const FiniteAbelianGroup &g);

/// Integer combination of products of identity, xi, zeta, the swap and the
/// two coordinate projections.
Endo endo(Rng &rng, const GroupPtr &base);
/// Product of automorphisms drawn from xi, xi^-1, the swap, -1 and
/// (a, b) -> (a + b, b).
Endo automorphism(Rng &rng, const GroupPtr &base);

/// Numerator of degree <= max_degree with an invertible constant term,
/// over (1 - t)^k with k <= max_denom.
RationalEndoSeries unit_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom);
RationalEndoSeries endo_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom);
RationalPairSeries pair_series(Rng &rng, const GroupPtr &base, int max_degree, unsigned max_denom);

std::vector<Pair> pair_coeffs(Rng &rng, const FiniteAbelianGroup &g, std::size_t length);

} // namespace tcm::sampling
