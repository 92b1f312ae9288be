#include <gtest/gtest.h>

#include "nests/relation.hpp"
#include "oracles.hpp"

using namespace nests;

namespace {

bool brute_transitive(const Relation& r) {
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y)
            for (int z = 0; z < r.size(); ++z)
                if (r.holds(x, y) && r.holds(y, z) && !r.holds(x, z)) return false;
    return true;
}

bool brute_t0(const SetFamily& f, bool both_ways) {
    const auto m = oracle::generated(f);
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = x + 1; y < m.size(); ++y) {
            if (both_ways ? !(m[x][y] && m[y][x]) : !(m[x][y] || m[y][x])) return false;
        }
    return true;
}

}  // namespace

TEST(GeneratedOrder, MatchesDefinitionOnEveryFamily) {
    for (int n = 1; n <= 3; ++n) {
        const Universe u(n);
        for (std::uint64_t i = 0; i < family_count(u); ++i) {
            const SetFamily f = family_at(u, i);
            const Relation r = generated_order(f);
            ASSERT_TRUE(oracle::matches(r, oracle::generated(f))) << i;
            ASSERT_EQ(r, generated_order_product_form(f));
        }
    }
}

TEST(GeneratedOrder, RandomFamiliesUpToSix) {
    oracle::Gen g(2024);
    for (int i = 0; i < 2000; ++i) {
        const SetFamily f = g.family(1 + g.below(6), 8);
        EXPECT_TRUE(oracle::matches(generated_order(f), oracle::generated(f)));
        EXPECT_EQ(generated_order(f), generated_order_product_form(f));
        EXPECT_EQ(generated_order(family_complement(f)), transpose(generated_order(f)));
        EXPECT_EQ(t0_separates(f), brute_t0(f, false));
        EXPECT_EQ(t1_separates(f), brute_t0(f, true));
        EXPECT_EQ(t0_separates(f), t0_product_characterization(f));
    }
}

TEST(GeneratedOrder, IsIrreflexive) {
    oracle::Gen g(5);
    for (int i = 0; i < 200; ++i) EXPECT_TRUE(is_irreflexive(generated_order(g.family(1 + g.below(5), 6))));
}

TEST(Transitivity, NestImpliesConditionImpliesTransitive) {
    for (int n = 1; n <= 3; ++n) {
        const Universe u(n);
        for (std::uint64_t i = 0; i < family_count(u); ++i) {
            const SetFamily f = family_at(u, i);
            const Relation r = generated_order(f);
            ASSERT_EQ(is_transitive(r), brute_transitive(r));
            if (is_nest(f)) ASSERT_TRUE(composition_condition(f));
            if (composition_condition(f)) ASSERT_TRUE(is_transitive(r));
        }
    }
}

TEST(Transitivity, DistinctTriplesIsWeaker) {
    // 0 < 1 and 1 < 0 but not 0 < 0: fails the standard form only.
    const Relation r = Relation::from_pairs(Universe(2), {{0, 1}, {1, 0}});
    EXPECT_FALSE(is_transitive(r));
    EXPECT_TRUE(is_transitive(r, Transitivity::distinct_triples));
}

TEST(Compose, MatchesDefinition) {
    oracle::Gen g(9);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + g.below(5);
        const Universe u(n);
        Relation a(u);
        Relation b(u);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (g.below(3) == 0) a.set(x, y);
                if (g.below(3) == 0) b.set(x, y);
            }
        const Relation c = compose(a, b);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                bool expected = false;
                for (int z = 0; z < n; ++z) expected |= b.holds(x, z) && a.holds(z, y);
                ASSERT_EQ(c.holds(x, y), expected);
            }
    }
}

TEST(StarUnion, OrderIsUnionWhenBothContainEmpty) {
    oracle::Gen g(77);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + g.below(5);
        const SetFamily f1 = g.family(n, 4).with({Subset()});
        const SetFamily f2 = g.family(n, 4).with({Subset()});
        const StarUnion s = star_union(f1, f2);
        ASSERT_TRUE(s.precondition_met);
        const auto a = oracle::generated(f1);
        const auto b = oracle::generated(f2);
        const auto c = oracle::generated(s.family);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) ASSERT_EQ(c[x][y], a[x][y] || b[x][y]);
    }
}

TEST(StarUnion, PreconditionReported) {
    const SetFamily f(Universe(2), {Subset(1)});
    EXPECT_FALSE(star_union(f, f).precondition_met);
}

TEST(LinearOrders, LowerRayNestGeneratesTheRanking) {
    const Universe u(4);
    const std::vector<int> rank = {2, 0, 3, 1};
    const Nest n = lower_ray_nest(u, rank);
    const Relation r = generated_order(n);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) EXPECT_EQ(r.holds(x, y), rank[x] < rank[y]);
    EXPECT_TRUE(is_linear_order(r));
    EXPECT_TRUE(t0_separates(n));
}

TEST(RelationPredicates, SmallCases) {
    const Universe u(3);
    const Relation id = Relation::identity(u);
    EXPECT_TRUE(is_reflexive(id));
    EXPECT_TRUE(is_antisymmetric(id));
    EXPECT_FALSE(is_total(id));
    const Relation chain = Relation::from_pairs(u, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_TRUE(is_asymmetric(chain));
    EXPECT_TRUE(is_linear_order(chain));
    EXPECT_EQ(reflexive_closure(chain).pair_count(), 6u);
    EXPECT_EQ(transpose(chain).pairs().front(), (std::pair<int, int>{1, 0}));
}
