#include "nests/harness/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace nests::harness {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Subset random_subset(Rng& rng, const Universe& u) { return Subset(rng() & u.full_mask()); }

SetFamily random_family(Rng& rng, const Universe& u, std::size_t max_members) {
    const int k = uniform_int(rng, 0, static_cast<int>(max_members));
    std::vector<Subset> sets;
    for (int i = 0; i < k; ++i) sets.push_back(random_subset(rng, u));
    return SetFamily::deduplicated(u, std::move(sets));
}

Nest random_nest(Rng& rng, const Universe& u) {
    std::vector<int> perm(static_cast<std::size_t>(u.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Subset> sets;
    Subset prefix;
    for (int len = 0; len <= u.size(); ++len) {
        if (len > 0) prefix.bits |= std::uint64_t{1} << perm[static_cast<std::size_t>(len - 1)];
        if (rng() & 1U) sets.push_back(prefix);
    }
    return Nest(u, std::move(sets));
}

FieldElement random_field_element(Rng& rng, bool allow_irrational) {
    const Rational a(uniform_int(rng, -8, 8), 1 << uniform_int(rng, 0, 2));
    if (!allow_irrational || uniform_int(rng, 0, 2) != 0) return FieldElement(a);
    return FieldElement(a, Rational(uniform_int(rng, -2, 2), uniform_int(rng, 1, 2)));
}

RayNest random_ray_nest(Rng& rng) {
    RayNest n;
    n.carrier.kind = uniform_int(rng, 0, 1) == 0 ? CarrierKind::Q : CarrierKind::Qsqrt2;
    const bool irrational = n.carrier.kind == CarrierKind::Qsqrt2 || uniform_int(rng, 0, 3) == 0;
    if (uniform_int(rng, 0, 1) == 0) {
        FieldElement lo = random_field_element(rng, irrational);
        FieldElement hi = lo + FieldElement(Rational(uniform_int(rng, 1, 8), 2));
        if (uniform_int(rng, 0, 2) == 0) {
            n.carrier.window.lo = lo;
        } else if (uniform_int(rng, 0, 1) == 0) {
            n.carrier.window.hi = hi;
        } else {
            n.carrier.window.lo = lo;
            n.carrier.window.hi = hi;
        }
    }
    n.shape = uniform_int(rng, 0, 1) == 0 ? RayShape::open : RayShape::closed;
    switch (uniform_int(rng, 0, 3)) {
        case 0:
            n.endpoints = EndpointSet::all_carrier();
            break;
        case 1: {
            FieldElement lo = random_field_element(rng, irrational);
            FieldElement hi = lo + FieldElement(Rational(uniform_int(rng, 1, 6), 2));
            std::optional<FieldElement> olo = uniform_int(rng, 0, 3) == 0 ? std::nullopt : std::optional(lo);
            std::optional<FieldElement> ohi = uniform_int(rng, 0, 3) == 0 ? std::nullopt : std::optional(hi);
            n.endpoints = EndpointSet::dense_interval(olo, uniform_int(rng, 0, 1) == 0, ohi,
                                                      uniform_int(rng, 0, 1) == 0,
                                                      n.carrier.kind == CarrierKind::Q && uniform_int(rng, 0, 2) == 0);
            break;
        }
        case 2:
            n.endpoints = EndpointSet::arithmetic_progression(random_field_element(rng, irrational),
                                                              FieldElement(Rational(uniform_int(rng, 1, 4), 2)));
            break;
        default: {
            std::vector<FieldElement> values;
            const int k = uniform_int(rng, 0, 4);
            for (int i = 0; i < k; ++i) values.push_back(random_field_element(rng, irrational));
            n.endpoints = EndpointSet::finite_list(std::move(values));
            break;
        }
    }
    n.validate();
    return n;
}

}  // namespace nests::harness
