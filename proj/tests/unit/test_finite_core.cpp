#include <gtest/gtest.h>

#include <set>

#include "nests/errors.hpp"
#include "nests/finite_core.hpp"
#include "oracles.hpp"

using namespace nests;

TEST(Subset, BasicOperations) {
    const Subset a = Subset::of({0, 2});
    const Subset b = Subset::of({2, 3});
    EXPECT_EQ((a | b).bits, 0b1101u);
    EXPECT_EQ((a & b).bits, 0b0100u);
    EXPECT_EQ((a - b).bits, 0b0001u);
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ(a.count(), 2);
    EXPECT_TRUE(Subset::of({2}).subset_of(a));
    EXPECT_FALSE(b.subset_of(a));
    EXPECT_EQ(a.complement(Universe(4)).bits, 0b1010u);
}

TEST(Subset, CanonicalOrderIsCardinalityThenMask) {
    std::vector<Subset> all = all_subsets(Universe(3));
    ASSERT_EQ(all.size(), 8u);
    const std::vector<std::uint64_t> expected = {0, 1, 2, 4, 3, 5, 6, 7};
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].bits, expected[i]);
}

TEST(Universe, LabelsAndDefaults) {
    const Universe plain(3);
    EXPECT_EQ(plain.label(0), "x1");
    const Universe named(2, {"a", "b"});
    EXPECT_EQ(named.label(1), "b");
    EXPECT_TRUE(plain.compatible(Universe(3)));
    EXPECT_EQ(plain.full_mask(), 7u);
}

TEST(SetFamily, RejectsDuplicatesAndOutOfRange) {
    EXPECT_THROW(SetFamily(Universe(2), {Subset(1), Subset(1)}), InvalidInstance);
    EXPECT_THROW(SetFamily(Universe(2), {Subset(4)}), InvalidInstance);
    const SetFamily f = SetFamily::deduplicated(Universe(2), {Subset(3), Subset(1), Subset(1)});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.sets()[0].bits, 1u);
}

TEST(SetFamily, EmptyUnionAndIntersection) {
    const SetFamily f(Universe(3));
    EXPECT_TRUE(f.union_all().empty());
    EXPECT_EQ(f.intersection_all().bits, 7u);
}

TEST(Nest, RejectsIncomparableMembers) {
    EXPECT_THROW(Nest(Universe(2), {Subset(1), Subset(2)}), InvalidInstance);
    EXPECT_NO_THROW(Nest(Universe(2), {Subset(1), Subset(3)}));
}

TEST(Nest, ComplementIsInvolution) {
    oracle::Gen g(11);
    for (int i = 0; i < 200; ++i) {
        const Nest n = g.nest(1 + g.below(6));
        const Nest c = family_complement(n);
        EXPECT_EQ(family_complement(c), n);
        for (Subset s : n) EXPECT_TRUE(c.family().contains(s.complement(n.universe())));
    }
}

// 4 * ordered Bell numbers: 1, 3, 13, 75.
TEST(EnumerateNests, CountMatchesFubiniFormula) {
    const std::vector<std::size_t> expected = {4, 12, 52, 300};
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_nests(Universe(n)).size(), expected[n - 1]) << n;
}

TEST(EnumerateNests, AgreesWithFilteredFamilies) {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::vector<std::uint64_t>> brute;
        for (auto& c : oracle::all_chains(n)) brute.insert(c);
        std::set<std::vector<std::uint64_t>> listed;
        for (const Nest& nest : enumerate_nests(Universe(n))) {
            std::vector<std::uint64_t> bits;
            for (Subset s : nest) bits.push_back(s.bits);
            std::sort(bits.begin(), bits.end());
            EXPECT_TRUE(listed.insert(bits).second) << "duplicate nest";
        }
        EXPECT_EQ(listed, brute) << n;
    }
}

TEST(EnumerateNests, OptionsRestrict) {
    NestEnumeration opts;
    opts.include_trivial = false;
    for (const Nest& n : enumerate_nests(Universe(3), opts)) {
        for (Subset s : n) {
            EXPECT_FALSE(s.empty());
            EXPECT_NE(s.bits, 7u);
        }
    }
    opts = {};
    opts.max_members = 2;
    for (const Nest& n : enumerate_nests(Universe(3), opts)) EXPECT_LE(n.size(), 2u);
    opts = {};
    EXPECT_THROW(enumerate_nests(Universe(5), opts), BoundExceeded);
    opts.bound = 5;
    EXPECT_NO_THROW(enumerate_nests(Universe(5), opts));
}

TEST(EnumerateNests, StreamingStopsEarly) {
    int seen = 0;
    for_each_nest(Universe(3), {}, [&](const Nest&) { return ++seen < 5; });
    EXPECT_EQ(seen, 5);
}

TEST(FamilyAt, CoversEveryFamilyOnce) {
    const Universe u(2);
    ASSERT_EQ(family_count(u), 16u);
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t i = 0; i < family_count(u); ++i) {
        std::vector<std::uint64_t> bits;
        for (Subset s : family_at(u, i)) bits.push_back(s.bits);
        seen.insert(bits);
    }
    EXPECT_EQ(seen.size(), 16u);
}
