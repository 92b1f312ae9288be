#include <gtest/gtest.h>

#include "nests/errors.hpp"
#include "nests/json_io.hpp"
#include "nests/roster.hpp"
#include "oracles.hpp"

using namespace nests;

TEST(JsonIo, FamilyRoundTrip) {
    oracle::Gen g(17);
    for (int i = 0; i < 300; ++i) {
        const SetFamily f = g.family(1 + g.below(6), 6);
        const Instance back = instance_from_json(to_json(f));
        EXPECT_EQ(back.kind, InstanceKind::family);
        EXPECT_EQ(back.family, f);
    }
}

TEST(JsonIo, NestAndTopologyRoundTrip) {
    oracle::Gen g(18);
    for (int i = 0; i < 100; ++i) {
        const Nest n = g.nest(1 + g.below(5));
        const Instance ni = instance_from_json(to_json(n));
        EXPECT_EQ(ni.kind, InstanceKind::nest);
        EXPECT_EQ(ni.family, n.family());
        const Topology t = topology_from_subbase(n.family());
        const Instance ti = instance_from_json(to_json(t));
        EXPECT_EQ(ti.kind, InstanceKind::topology);
        EXPECT_EQ(ti.family, t.opens());
    }
}

TEST(JsonIo, ExplicitDocument) {
    const json j = json::parse(R"({"universe": 3, "labels": ["a","b","c"], "kind": "nest",
                                   "family": [[], [0], [0, 1]], "dual": [[2], [1, 2], [0, 1, 2]]})");
    const Instance inst = instance_from_json(j);
    EXPECT_EQ(inst.family.size(), 3u);
    ASSERT_TRUE(inst.dual.has_value());
    EXPECT_EQ(roster(inst.family), "{∅, {a}, {a,b}}");
}

TEST(JsonIo, InvalidInstancesRejected) {
    EXPECT_THROW(instance_from_json(json::parse(R"({"universe": 2, "family": [[2]]})")), InvalidInstance);
    EXPECT_THROW(instance_from_json(json::parse(R"({"universe": 2, "family": [[0], [0]]})")), InvalidInstance);
    EXPECT_THROW(instance_from_json(json::parse(R"({"universe": 2, "kind": "nest", "family": [[0], [1]]})")),
                 InvalidInstance);
    EXPECT_THROW(instance_from_json(json::parse(R"({"universe": 3, "kind": "topology",
                                                   "family": [[], [0], [1], [0, 1, 2]]})")),
                 InvalidInstance);
    EXPECT_THROW(instance_from_json(json::parse(R"({"family": []})")), InvalidInstance);
    EXPECT_THROW(load_json_file("/nonexistent/file.json"), InvalidInstance);
}

TEST(JsonIo, ParseSubsetForms) {
    const Universe labelled(3, {"a", "b", "c"});
    EXPECT_EQ(parse_subset("{a, c}", labelled).bits, 0b101u);
    EXPECT_EQ(parse_subset("b", labelled).bits, 0b010u);
    const Universe plain(4);
    EXPECT_EQ(parse_subset("{x1, x3}", plain).bits, 0b101u);
    EXPECT_EQ(parse_subset("0,3", plain).bits, 0b1001u);
    EXPECT_EQ(parse_subset("{}", plain).bits, 0u);
    EXPECT_THROW(parse_subset("{x9}", plain), InvalidInstance);
}

TEST(JsonIo, GroupAndRelationRoundTrip) {
    const FiniteGroup g = FiniteGroup::symmetric3();
    EXPECT_EQ(group_from_json(to_json(g)).table(), g.table());
    const Relation r = Relation::from_pairs(Universe(3), {{0, 2}, {1, 2}});
    EXPECT_EQ(relation_from_json(to_json(r)), r);
}

TEST(JsonIo, ExactNumbers) {
    const FieldElement x(make_rational(-3, 4), make_rational(5, 2));
    EXPECT_EQ(field_from_json(to_json(x)), x);
    EXPECT_EQ(rational_from_json(to_json(make_rational(7, 3))), make_rational(7, 3));
}

TEST(Roster, Notation) {
    const Universe u(3);
    EXPECT_EQ(roster(Subset(), u), "∅");
    EXPECT_EQ(roster(Subset::of({0, 2}), u), "{x1,x3}");
    EXPECT_EQ(roster(Relation::from_pairs(u, {{0, 2}})), "{(x1,x3)}");
}
