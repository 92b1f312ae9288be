#include <gtest/gtest.h>

#include "nests/errors.hpp"
#include "nests/group.hpp"
#include "oracles.hpp"

using namespace nests;

namespace {

std::vector<FiniteGroup> builtins() {
    return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::klein(),
            FiniteGroup::symmetric3(), FiniteGroup::dihedral4()};
}

std::uint64_t image(const FiniteGroup& g, std::uint64_t s, const std::function<int(int)>& f) {
    std::uint64_t out = 0;
    for (int x = 0; x < g.order(); ++x)
        if (oracle::in(s, x)) out |= std::uint64_t{1} << f(x);
    return out;
}

bool brute_compatible(const FiniteGroup& g, const Nest& n) {
    const auto lt = oracle::generated(n);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int x = 0; x < g.order(); ++x) {
                if (lt[a][b] != lt[g.op(a, x)][g.op(b, x)]) return false;
                if (lt[a][b] != lt[g.op(x, a)][g.op(x, b)]) return false;
            }
    return true;
}

bool brute_translation_closed(const FiniteGroup& g, const SetFamily& f) {
    for (Subset s : f)
        for (int x = 0; x < g.order(); ++x) {
            if (!f.contains(Subset(image(g, s.bits, [&](int y) { return g.op(x, y); })))) return false;
            if (!f.contains(Subset(image(g, s.bits, [&](int y) { return g.op(y, x); })))) return false;
        }
    return true;
}

std::vector<std::uint64_t> joint(const SetFamily& l, const SetFamily& r) {
    std::vector<std::uint64_t> out;
    for (Subset s : l) out.push_back(s.bits);
    for (Subset s : r) out.push_back(s.bits);
    return out;
}

bool brute_inversion_continuous(const FiniteGroup& g, const SetFamily& l, const SetFamily& r) {
    const auto opens = oracle::opens_from_subbase(g.order(), joint(l, r));
    for (std::uint64_t u : opens)
        if (!opens.count(image(g, u, [&](int x) { return g.inverse(x); }))) return false;
    return true;
}

// Continuity at every pair: the minimal neighbourhoods multiply into any open containing ab.
bool brute_multiplication_continuous(const FiniteGroup& g, const SetFamily& l, const SetFamily& r) {
    const auto opens = oracle::opens_from_subbase(g.order(), joint(l, r));
    std::vector<std::uint64_t> nbhd(g.order(), (std::uint64_t{1} << g.order()) - 1);
    for (std::uint64_t u : opens)
        for (int x = 0; x < g.order(); ++x)
            if (oracle::in(u, x)) nbhd[x] &= u;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (std::uint64_t u : opens) {
                if (!oracle::in(u, g.op(a, b))) continue;
                for (int x = 0; x < g.order(); ++x)
                    for (int y = 0; y < g.order(); ++y)
                        if (oracle::in(nbhd[a], x) && oracle::in(nbhd[b], y) && !oracle::in(u, g.op(x, y)))
                            return false;
            }
    return true;
}

}  // namespace

TEST(FiniteGroup, BuiltinsSatisfyAxioms) {
    for (const FiniteGroup& g : builtins()) {
        const int n = g.order();
        for (int a = 0; a < n; ++a) {
            EXPECT_EQ(g.op(a, g.identity()), a);
            EXPECT_EQ(g.op(g.identity(), a), a);
            EXPECT_EQ(g.op(a, g.inverse(a)), g.identity());
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) EXPECT_EQ(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
        }
    }
    EXPECT_TRUE(FiniteGroup::klein().is_abelian());
    EXPECT_FALSE(FiniteGroup::symmetric3().is_abelian());
    EXPECT_FALSE(FiniteGroup::dihedral4().is_abelian());
    EXPECT_EQ(FiniteGroup::dihedral4().order(), 8);
}

TEST(FiniteGroup, BuiltinNames) {
    EXPECT_EQ(FiniteGroup::builtin("Z5").order(), 5);
    EXPECT_EQ(FiniteGroup::builtin("Z2xZ2").name(), "Z2xZ2");
    EXPECT_EQ(FiniteGroup::builtin("S3").order(), 6);
    EXPECT_THROW(FiniteGroup::builtin("Q8"), Unsupported);
}

TEST(FiniteGroup, TableValidation) {
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInstance);
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}), InvalidInstance);
    EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}), InvalidInstance);
    EXPECT_NO_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
}

TEST(SetOperations, TranslateInverseProduct) {
    const FiniteGroup g = FiniteGroup::cyclic(4);
    EXPECT_EQ(translate(1, Subset::of({0, 3}), Side::left, g).bits, Subset::of({1, 0}).bits);
    EXPECT_EQ(inverse_set(Subset::of({1}), g).bits, Subset::of({3}).bits);
    EXPECT_EQ(product_set(Subset::of({0, 2}), Subset::of({0, 2}), g).bits, Subset::of({0, 2}).bits);
}

TEST(Compatibility, MatchesBruteForceOverAllNests) {
    for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                                 FiniteGroup::klein()}) {
        for (const Nest& n : enumerate_nests(g.universe())) {
            const Compatibility c = order_compatibility(g, n);
            ASSERT_EQ(c.compatible, brute_compatible(g, n));
            ASSERT_EQ(c.witness.has_value(), !c.compatible);
            ASSERT_EQ(prop51_premise(g, n), brute_translation_closed(g, n));
            if (prop51_premise(g, n)) ASSERT_TRUE(c.compatible);
        }
    }
}

TEST(Compatibility, Z3SingletonIsIncompatible) {
    const FiniteGroup g = FiniteGroup::cyclic(3);
    const Nest n(g.universe(), {Subset::of({0})});
    const Compatibility c = order_compatibility(g, n);
    EXPECT_FALSE(c.compatible);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_FALSE(prop51_premise(g, n));
}

TEST(Continuity, Z2AllFamilyPairs) {
    const FiniteGroup g = FiniteGroup::cyclic(2);
    const Universe u = g.universe();
    for (std::uint64_t i = 0; i < family_count(u); ++i)
        for (std::uint64_t j = 0; j < family_count(u); ++j) {
            const SetFamily l = family_at(u, i);
            const SetFamily r = family_at(u, j);
            const ContinuityCheck inv = inversion_continuity_check(g, l, r);
            const ContinuityCheck mul = multiplication_continuity_check(g, l, r);
            ASSERT_EQ(inv.conclusion, brute_inversion_continuous(g, l, r));
            ASSERT_EQ(mul.conclusion, brute_multiplication_continuous(g, l, r));
            if (inv.premise) ASSERT_TRUE(inv.conclusion);
            if (mul.premise) ASSERT_TRUE(mul.conclusion);
        }
}

TEST(Continuity, RandomPairsOnLargerGroups) {
    oracle::Gen gen(55);
    for (const FiniteGroup& g : builtins()) {
        for (int i = 0; i < 300; ++i) {
            const SetFamily l = gen.family(g.order(), 4);
            const SetFamily r = gen.below(2) ? l : gen.family(g.order(), 4);
            const ContinuityCheck inv = inversion_continuity_check(g, l, r);
            ASSERT_EQ(inv.conclusion, brute_inversion_continuous(g, l, r));
            const ContinuityCheck mul = multiplication_continuity_check(g, l, r);
            ASSERT_EQ(mul.conclusion, brute_multiplication_continuous(g, l, r));
            EXPECT_EQ(group_topology(l, r).open_count(), oracle::opens_from_subbase(g.order(), joint(l, r)).size());
        }
    }
}
