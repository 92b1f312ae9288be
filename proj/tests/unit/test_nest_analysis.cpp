#include <gtest/gtest.h>

#include "nests/errors.hpp"
#include "nests/nest_analysis.hpp"
#include "oracles.hpp"

using namespace nests;

namespace {

// Every nest on up to `max_n` points.
std::vector<Nest> small_nests(int max_n) {
    std::vector<Nest> out;
    for (int n = 1; n <= max_n; ++n) {
        for (Nest& nest : enumerate_nests(Universe(n))) out.push_back(std::move(nest));
    }
    return out;
}

}  // namespace

TEST(Sup, MatchesBruteForceOnRandomPreorders) {
    oracle::Gen g(41);
    for (int i = 0; i < 3000; ++i) {
        const int n = 1 + g.below(6);
        const Nest nest = g.nest(n);
        const auto le = oracle::reflexive(oracle::generated(nest));
        const Relation order = nest_order(nest);
        const Subset s(g.rng() & Universe(n).full_mask());
        const SupResult r = sup_wrt(s, order);
        const int expected = oracle::sup(s.bits, le);
        ASSERT_EQ(r.exists, expected >= 0);
        if (r.exists) ASSERT_EQ(*r.element, expected);
    }
}

TEST(Sup, ReasonsAndEmptySet) {
    // Two incomparable maxima: no upper bound of the whole set.
    const Universe u(3);
    const Relation order = reflexive_closure(Relation::from_pairs(u, {{0, 1}, {0, 2}}));
    EXPECT_EQ(sup_wrt(Subset::of({1, 2}), order).reason, SupReason::no_upper_bound);
    EXPECT_EQ(*sup_wrt(Subset(), order).element, 0);
    EXPECT_EQ(*inf_wrt(Subset::of({1, 2}), order).element, 0);
    // 1 and 2 tied above 0: bounds exist but none is least.
    const Relation tied = reflexive_closure(Relation::from_pairs(u, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}));
    EXPECT_EQ(sup_wrt(Subset::of({1}), tied).reason, SupReason::no_least_upper_bound);
}

TEST(Conditions, MatchBruteForceOnEveryNestUpToFour) {
    for (const Nest& nest : small_nests(4)) {
        const Conditions c = check_conditions(nest);
        const oracle::Conditions o = oracle::conditions(nest);
        ASSERT_EQ(c.c1, o.c1);
        ASSERT_EQ(c.c2, o.c2);
        ASSERT_EQ(c.c3, o.c3);
    }
}

TEST(Conditions, RandomNestsUpToSix) {
    oracle::Gen g(6);
    for (int i = 0; i < 3000; ++i) {
        const Nest nest = g.nest(1 + g.below(6));
        const Conditions c = check_conditions(nest);
        const oracle::Conditions o = oracle::conditions(nest);
        ASSERT_EQ(c.c1, o.c1);
        ASSERT_EQ(c.c2, o.c2);
        ASSERT_EQ(c.c3, o.c3);
    }
}

TEST(Conditions, SinglePointWithEmptyMember) {
    const Nest n(Universe(1), {Subset()});
    const Conditions c = check_conditions(n);
    EXPECT_TRUE(c.c1 && c.c2 && c.c3);
}

TEST(Interlocking, ThreeFormsAgreeWithDefinition) {
    for (const Nest& nest : small_nests(4)) {
        const bool def = oracle::interlocking(nest);
        ASSERT_EQ(is_interlocking_def(nest), def);
        ASSERT_EQ(is_interlocking_alexandroff(nest), def);
        ASSERT_EQ(is_interlocking_lowersets(nest), def);
    }
}

TEST(Interlocking, DefinitionOnArbitraryFamilies) {
    for (int n = 1; n <= 3; ++n) {
        const Universe u(n);
        for (std::uint64_t i = 0; i < family_count(u); ++i) {
            const SetFamily f = family_at(u, i);
            ASSERT_EQ(is_interlocking_def(f), oracle::interlocking(f));
        }
    }
}

TEST(Interlocking, KnownCases) {
    const Universe u(2);
    // X is the empty meet but not the union of {x1}.
    EXPECT_FALSE(is_interlocking_def(SetFamily(u, {Subset(1), Subset(3)})));
    EXPECT_TRUE(is_interlocking_def(SetFamily(u, {Subset(0), Subset(1)})));
}

TEST(DualPairs, ComplementIsDual) {
    oracle::Gen g(14);
    for (int i = 0; i < 500; ++i) {
        const Nest l = g.nest(1 + g.below(5));
        const Nest r = family_complement(l);
        const DualNestPair p = make_dual_pair(l, r);
        const Conditions star = check_conditions_star(p);
        const oracle::Conditions o = oracle::conditions(r);
        ASSERT_EQ(star.c1, o.c1);
        ASSERT_EQ(star.c2, o.c2);
        ASSERT_EQ(star.c3, o.c3);
    }
}

TEST(DualPairs, MismatchCarriesWitness) {
    const Universe u(2);
    const Nest l(u, {Subset(1)});
    try {
        make_dual_pair(l, l);
        FAIL() << "expected DualityViolation";
    } catch (const DualityViolation& e) {
        EXPECT_EQ(e.witness, (std::pair<int, int>{0, 1}));
    }
}

TEST(Lots, LinearRaysSatisfyConclusion) {
    const Universe u(3);
    const Nest l = lower_ray_nest(u, {0, 1, 2});
    const LotsReport r = lots_check(make_dual_pair(l, family_complement(l)));
    EXPECT_TRUE(r.linear);
    EXPECT_TRUE(r.subbase_matches_rays);
    EXPECT_TRUE(r.conclusion);
    EXPECT_EQ(r.hypotheses, r.c3_pair || r.t0_c2_pair);
}

TEST(SetFormulas, DownAndUpSetsMatchStrictCones) {
    for (const Nest& nest : small_nests(4)) {
        const Relation strict = generated_order(nest);
        for (std::uint64_t bits = 0; bits <= nest.universe().full_mask(); ++bits) {
            const Subset y(bits);
            ASSERT_EQ(down_set_formula(y, nest), down_set_strict(y, strict));
            ASSERT_EQ(up_set_formula(y, nest), up_set_strict(y, strict));
        }
    }
}

TEST(MemberTests, RejectsNonMember) {
    const Nest n(Universe(2), {Subset(1)});
    EXPECT_THROW(member_lower_set_tests(n, Subset(2)), InvalidInstance);
    EXPECT_NO_THROW(member_lower_set_tests(n, Subset(1)));
}

// X = {1..5} with the nest {{1,2},{1,2,3}}: 4 and 5 are unrelated, yet 3 sits
// below both, so it is the least upper bound of {1,2} and of {1,2,3}.
TEST(Sup, FivePointNest) {
    const Nest n(Universe(5), {Subset::of({0, 1}), Subset::of({0, 1, 2})});
    const Relation order = nest_order(n);
    EXPECT_EQ(*sup_wrt(Subset::of({0, 1}), order).element, 2);
    EXPECT_EQ(*sup_wrt(Subset::of({0, 1, 2}), order).element, 2);
    EXPECT_EQ(sup_wrt(Subset::of({3, 4}), order).reason, SupReason::no_upper_bound);
}
