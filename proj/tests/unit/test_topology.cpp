#include <gtest/gtest.h>

#include "nests/errors.hpp"
#include "nests/nest_analysis.hpp"
#include "nests/topology.hpp"
#include "oracles.hpp"

using namespace nests;

namespace {

std::vector<std::uint64_t> bits_of(const SetFamily& f) {
    std::vector<std::uint64_t> out;
    for (Subset s : f) out.push_back(s.bits);
    return out;
}

// Point up-set and down-set complements under a reflexive matrix.
std::vector<std::uint64_t> ray_complements(const std::vector<std::vector<bool>>& le, bool up) {
    const int n = static_cast<int>(le.size());
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> out;
    for (int x = 0; x < n; ++x) {
        std::uint64_t cone = 0;
        for (int y = 0; y < n; ++y)
            if (up ? le[x][y] : le[y][x]) cone |= std::uint64_t{1} << y;
        out.push_back(full & ~cone);
    }
    return out;
}

}  // namespace

TEST(Topology, SubbaseClosureMatchesLiteralClosure) {
    for (int n = 1; n <= 3; ++n) {
        const Universe u(n);
        for (std::uint64_t i = 0; i < family_count(u); ++i) {
            const SetFamily f = family_at(u, i);
            const Topology t = topology_from_subbase(f);
            ASSERT_EQ(oracle::opens_of(t.opens()), oracle::opens_from_subbase(n, bits_of(f))) << i;
            ASSERT_EQ(t.open_count(), t.opens().size());
        }
    }
}

TEST(Topology, RandomSubbasesOnFivePoints) {
    oracle::Gen g(3);
    for (int i = 0; i < 300; ++i) {
        const SetFamily f = g.family(5, 5);
        const Topology t = topology_from_subbase(f);
        EXPECT_EQ(oracle::opens_of(t.opens()), oracle::opens_from_subbase(5, bits_of(f)));
        for (Subset s : f) EXPECT_TRUE(t.is_open(s));
    }
}

TEST(Topology, FromOpensValidates) {
    const Universe u(2);
    EXPECT_THROW(Topology::from_opens(SetFamily(u, {Subset(0), Subset(1)})), InvalidInstance);
    // {x1} and {x2} are open but their union is not.
    EXPECT_THROW(Topology::from_opens(SetFamily(Universe(3), {Subset(0), Subset(1), Subset(2), Subset(7)})),
                 InvalidInstance);
    EXPECT_NO_THROW(Topology::from_opens(SetFamily(u, {Subset(0), Subset(1), Subset(3)})));
}

TEST(Topology, DiscreteAndIndiscrete) {
    const Universe u(3);
    EXPECT_EQ(Topology::discrete(u).open_count(), 8u);
    EXPECT_EQ(Topology::indiscrete(u).open_count(), 2u);
    EXPECT_TRUE(Topology::indiscrete(u).coarser_than(Topology::discrete(u)));
    EXPECT_FALSE(Topology::discrete(u).coarser_than(Topology::indiscrete(u)));
}

TEST(Topology, OrderTopologiesMatchTheirSubbases) {
    for (int n = 1; n <= 4; ++n) {
        for (const Nest& nest : enumerate_nests(Universe(n))) {
            const Relation order = nest_order(nest);
            const auto le = oracle::reflexive(oracle::generated(nest));
            const auto lo = ray_complements(le, true);
            const auto hi = ray_complements(le, false);
            auto both = lo;
            both.insert(both.end(), hi.begin(), hi.end());
            ASSERT_EQ(oracle::opens_of(lower_topology(order).opens()), oracle::opens_from_subbase(n, lo));
            ASSERT_EQ(oracle::opens_of(upper_topology(order).opens()), oracle::opens_from_subbase(n, hi));
            ASSERT_EQ(oracle::opens_of(interval_topology(order).opens()), oracle::opens_from_subbase(n, both));
            ASSERT_EQ(interval_topology(order), join(lower_topology(order), upper_topology(order)));
        }
    }
}

TEST(Topology, OpenRaysOfALinearOrderGiveTheIntervalTopology) {
    const Universe u(4);
    const Relation order = reflexive_closure(generated_order(lower_ray_nest(u, {0, 1, 2, 3})));
    EXPECT_EQ(open_ray_topology(order), interval_topology(order));
    // Finite linear orders are discrete in their interval topology.
    EXPECT_EQ(interval_topology(order), Topology::discrete(u));
}

TEST(Topology, StrictCones) {
    const Universe u(3);
    const Relation strict = Relation::from_pairs(u, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(up_set_strict(Subset::of({0}), strict).bits, Subset::of({1, 2}).bits);
    EXPECT_EQ(down_set_strict(Subset::of({2}), strict).bits, Subset::of({0, 1}).bits);
    EXPECT_TRUE(down_set_strict(Subset(), strict).empty());
    const Relation le = reflexive_closure(strict);
    EXPECT_EQ(up_point(1, le).bits, Subset::of({1, 2}).bits);
    EXPECT_EQ(down_point(1, le).bits, Subset::of({0, 1}).bits);
}

TEST(Topology, ClosedSets) {
    const Universe u(2);
    const Topology t = topology_from_subbase(SetFamily(u, {Subset(1)}));
    EXPECT_TRUE(is_closed(t, Subset(2)));
    EXPECT_FALSE(is_closed(t, Subset(1)));
}

TEST(Continuity, IdentityConstantsAndProjections) {
    oracle::Gen g(8);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + g.below(3);
        const Universe u(n);
        const Topology a = topology_from_subbase(g.family(n, 3));
        const Topology b = topology_from_subbase(g.family(n, 3));
        std::vector<int> id(n);
        for (int k = 0; k < n; ++k) id[k] = k;
        EXPECT_TRUE(is_continuous(id, a, a));
        EXPECT_EQ(is_continuous(id, a, b), b.coarser_than(a));
        EXPECT_TRUE(is_continuous(std::vector<int>(n, g.below(n)), a, b));
        const Topology p = product_topology(a, b);
        std::vector<int> first(n * n);
        std::vector<int> second(n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                first[x * n + y] = x;
                second[x * n + y] = y;
            }
        EXPECT_TRUE(is_continuous(first, p, a));
        EXPECT_TRUE(is_continuous(second, p, b));
    }
}

TEST(Continuity, RejectsPartialMaps) {
    const Universe u(2);
    const Topology t = Topology::discrete(u);
    EXPECT_THROW(is_continuous({0}, t, t), NonTotalMap);
}

TEST(Topology, OpensRefusedAboveLimit) {
    const Universe u(kMaxExplicitOpens + 1);
    EXPECT_THROW(Topology::discrete(u).opens(), BoundExceeded);
}
