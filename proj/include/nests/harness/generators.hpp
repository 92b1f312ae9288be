#pragma once

#include <cstdint>
#include <random>

#include "nests/finite_core.hpp"
#include "nests/ray_nests.hpp"

namespace nests::harness {

using Rng = std::mt19937_64;

/// Independent generator for instance `index` of a sweep seeded with `seed`,
/// so results do not depend on how instances are split across workers.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// Every element kept with probability 1/2.
Subset random_subset(Rng& rng, const Universe& u);

/// Up to `max_members` random subsets, duplicates merged.
SetFamily random_family(Rng& rng, const Universe& u, std::size_t max_members);

/// A random chain: prefixes of a random permutation, each length kept with probability 1/2.
Nest random_nest(Rng& rng, const Universe& u);

/// Small dyadic rational or a + b*sqrt(2) with small coefficients.
FieldElement random_field_element(Rng& rng, bool allow_irrational);

/// Random ray nest over a full line or a bounded window; every endpoint kind occurs.
RayNest random_ray_nest(Rng& rng);

}  // namespace nests::harness
