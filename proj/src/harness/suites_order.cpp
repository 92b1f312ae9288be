// Suites over finite families: core invariants, generated orders, topologies.

#include <algorithm>
#include <numeric>
#include <set>

#include "nests/harness/generators.hpp"
#include "nests/nest_analysis.hpp"
#include "nests/topology.hpp"
#include "suite_common.hpp"

namespace nests::harness::detail {

namespace {

// Every family on universes 1..max_n, addressed by one flat index.
struct FamilySpace {
    std::vector<std::uint64_t> offsets{0};

    explicit FamilySpace(int max_n) {
        for (int n = 1; n <= max_n; ++n) offsets.push_back(offsets.back() + family_count(Universe(n)));
    }
    std::uint64_t size() const { return offsets.back(); }
    SetFamily at(std::uint64_t i) const {
        const auto it = std::upper_bound(offsets.begin(), offsets.end(), i);
        const int n = static_cast<int>(it - offsets.begin());
        return family_at(Universe(n), i - offsets[static_cast<std::size_t>(n - 1)]);
    }
};

SetFamily random_family_any(Rng& rng, int max_n) {
    const Universe u(uniform_int(rng, 1, max_n));
    return random_family(rng, u, static_cast<std::size_t>(uniform_int(rng, 0, 8)));
}

// Closure of a subbase by finite intersections, then arbitrary unions, done literally.
SetFamily literal_closure(const SetFamily& subbase) {
    const Universe& u = subbase.universe();
    std::set<std::uint64_t> base{u.full_mask()};
    for (Subset s : subbase) {
        std::set<std::uint64_t> next = base;
        for (std::uint64_t b : base) next.insert(b & s.bits);
        base = std::move(next);
    }
    std::set<std::uint64_t> opens{0};
    for (std::uint64_t b : base) {
        std::set<std::uint64_t> next = opens;
        for (std::uint64_t o : opens) next.insert(o | b);
        opens = std::move(next);
    }
    std::vector<Subset> sets;
    for (std::uint64_t o : opens) sets.emplace_back(o);
    return SetFamily(u, std::move(sets));
}

bool closed_under_pairs(const SetFamily& f) {
    for (Subset a : f) {
        for (Subset b : f) {
            if (!f.contains(a | b) || !f.contains(a & b)) return false;
        }
    }
    return f.contains(Subset()) && f.contains(Subset::full(f.universe()));
}

void check_order_properties(const SetFamily& f, Collector& c) {
    auto inst = [&] { return family_json(f); };
    const Relation order = generated_order(f);
    c.expect("lemma2.1-product-form", order == generated_order_product_form(f), inst);
    const bool nest = is_nest(f);
    const bool condition = composition_condition(f);
    c.check("cor2.1-nest-implies-condition", nest, condition, inst);
    c.check("cor2.1-condition-implies-transitive", condition, is_transitive(order, Transitivity::standard), inst);
    c.expect("prop2.2-t0-product", t0_separates(f) == t0_product_characterization(f), inst);
    c.expect("remark1.1-transpose", generated_order(family_complement(f)) == transpose(order), inst);
    c.check("t0-nest-linear", nest && t0_separates(f), is_linear_order(order), inst);
}

void check_star_union(const SetFamily& f1, const SetFamily& f2, Collector& c) {
    const StarUnion su = star_union(f1, f2);
    c.check("prop2.3-star-union", su.precondition_met,
            generated_order(su.family) == (generated_order(f1) | generated_order(f2)),
            [&] { return pair_json(f1, f2); });
}

void check_singletons(int n, Collector& c) {
    const Universe u(n);
    std::vector<Subset> sets;
    for (int i = 0; i < n; ++i) sets.push_back(Subset::of({i}));
    const SetFamily f(u, sets);
    const Relation order = generated_order(f);
    c.check("remark2.1-singletons", n >= 2,
            !is_transitive(order, Transitivity::standard) && is_transitive(order, Transitivity::distinct_triples) &&
                !composition_condition(f),
            [&] { return family_json(f); });
}

void check_lower_rays(Rng& rng, int n, Collector& c) {
    const Universe u(n);
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    const Nest rays = lower_ray_nest(u, rank);
    const Relation order = generated_order(rays);
    bool matches = true;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) matches &= order.holds(x, y) == (rank[std::size_t(x)] < rank[std::size_t(y)]);
    }
    c.expect("lower-ray-nest-t0", t0_separates(rays) && matches, [&] { return nest_json(rays); });
}

}  // namespace

SuiteReport run_finite_core(const SuiteConfig& cfg) {
    SuiteReport report = start_report("finite-core", cfg);
    const std::vector<Nest> nests = nests_up_to(cfg.max_n);

    Collector counts;
    for (int n = 1; n <= cfg.max_n; ++n) {
        const Universe u(n);
        const std::vector<Nest> all = enumerate_nests(u);
        std::set<std::vector<std::uint64_t>> distinct;
        for (const Nest& nest : all) {
            std::vector<std::uint64_t> masks;
            for (Subset s : nest) masks.push_back(s.bits);
            distinct.insert(std::move(masks));
        }
        auto inst = [&] { return json{{"universe", n}}; };
        counts.expect("nest-count-fubini", all.size() == 4 * fubini(n), inst,
                      std::to_string(all.size()) + " nests");
        counts.expect("nest-enumeration-unique", distinct.size() == all.size(), inst);
        counts.expect("all-subsets-count", all_subsets(u).size() == (std::size_t{1} << n), inst);
    }
    counts.finalize();
    report.absorb(counts);

    report.absorb(sweep(nests.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        const Nest& nest = nests[i];
        c.count_instance();
        auto inst = [&] { return nest_json(nest); };
        c.expect("nest-valid", is_nest(nest.family()), inst);
        const Nest comp = family_complement(nest);
        c.expect("complement-involution", family_complement(comp) == nest, inst);
    }));

    const FamilySpace space(std::min(cfg.max_n, 3));
    report.absorb(sweep(space.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        const SetFamily f = space.at(i);
        c.count_instance();
        std::uint64_t index = 0;
        const std::vector<Subset> subsets = all_subsets(f.universe());
        for (std::size_t k = 0; k < subsets.size(); ++k) {
            if (f.contains(subsets[k])) index |= std::uint64_t{1} << k;
        }
        c.expect("family-at-roundtrip", index == i - space.offsets[std::size_t(f.universe().size() - 1)],
                 [&] { return family_json(f); });
    }));

    report.absorb(sweep(cfg.iters, cfg.mode, [&](std::uint64_t i, Collector& c) {
        Rng rng = instance_rng(cfg.seed, i);
        const SetFamily f = random_family_any(rng, cfg.random_max_n);
        c.count_instance();
        auto inst = [&] { return family_json(f); };
        const bool sorted = std::is_sorted(f.begin(), f.end(), canonical_less) &&
                            std::adjacent_find(f.begin(), f.end()) == f.end();
        c.expect("family-canonical", sorted, inst);
        c.expect("complement-involution", family_complement(family_complement(f)) == f, inst);
        const Nest nest = random_nest(rng, Universe(uniform_int(rng, 1, cfg.random_max_n)));
        c.expect("random-nest-valid", is_nest(nest.family()), [&] { return nest_json(nest); });
    }));
    return report;
}

SuiteReport run_product_form(const SuiteConfig& cfg) {
    SuiteReport report = start_report("lemma2.1-product-form", cfg);
    const FamilySpace space(cfg.max_n);
    report.absorb(sweep(space.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        const SetFamily f = space.at(i);
        c.count_instance();
        c.expect("lemma2.1-product-form", generated_order(f) == generated_order_product_form(f),
                 [&] { return family_json(f); });
    }));
    report.absorb(sweep(cfg.iters, cfg.mode, [&](std::uint64_t i, Collector& c) {
        Rng rng = instance_rng(cfg.seed, i);
        const SetFamily f = random_family_any(rng, cfg.random_max_n);
        c.count_instance();
        c.expect("lemma2.1-product-form", generated_order(f) == generated_order_product_form(f),
                 [&] { return family_json(f); });
    }));
    return report;
}

SuiteReport run_generated_order(const SuiteConfig& cfg) {
    const int exhaustive_n = std::min(cfg.max_n, 3);
    SuiteReport report = start_report("generated-order", cfg, {{"exhaustive_family_n", exhaustive_n}});
    const FamilySpace space(exhaustive_n);

    report.absorb(sweep(space.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        c.count_instance();
        check_order_properties(space.at(i), c);
    }));

    // Star unions over every ordered pair of empty-set-containing families of one universe.
    std::vector<std::pair<SetFamily, SetFamily>> pairs;
    for (int n = 1; n <= exhaustive_n; ++n) {
        std::vector<SetFamily> with_empty;
        const Universe u(n);
        for (std::uint64_t k = 0; k < family_count(u); ++k) {
            SetFamily f = family_at(u, k);
            if (f.contains(Subset())) with_empty.push_back(std::move(f));
        }
        for (const SetFamily& a : with_empty) {
            for (const SetFamily& b : with_empty) pairs.emplace_back(a, b);
        }
    }
    report.absorb(sweep(pairs.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        c.count_instance();
        check_star_union(pairs[i].first, pairs[i].second, c);
    }));

    Collector singles;
    for (int n = 1; n <= cfg.random_max_n; ++n) check_singletons(n, singles);
    singles.finalize();
    report.absorb(singles);

    report.absorb(sweep(cfg.iters, cfg.mode, [&](std::uint64_t i, Collector& c) {
        Rng rng = instance_rng(cfg.seed, i);
        c.count_instance();
        const SetFamily f = random_family_any(rng, cfg.random_max_n);
        check_order_properties(f, c);
        const Nest nest = random_nest(rng, Universe(uniform_int(rng, 1, cfg.random_max_n)));
        check_order_properties(nest.family(), c);
        const SetFamily g = random_family(rng, f.universe(), 6).with({Subset()});
        check_star_union(f.with({Subset()}), g, c);
        check_lower_rays(rng, uniform_int(rng, 1, cfg.random_max_n), c);
    }));
    return report;
}

SuiteReport run_topo(const SuiteConfig& cfg) {
    const int family_n = std::min(cfg.max_n, 3);
    SuiteReport report = start_report("topo", cfg, {{"exhaustive_family_n", family_n}});
    const FamilySpace space(family_n);

    auto subbase_checks = [](const SetFamily& f, Collector& c) {
        auto inst = [&] { return family_json(f); };
        const Topology t = Topology::from_subbase(f);
        const SetFamily opens = t.opens();
        c.expect("subbase-closure-literal", opens == literal_closure(f), inst);
        c.expect("topology-axioms", closed_under_pairs(opens), inst);
        bool member_open = true;
        for (Subset s : f) member_open &= t.is_open(s);
        c.expect("subbase-members-open", member_open, inst);
    };

    report.absorb(sweep(space.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        c.count_instance();
        subbase_checks(space.at(i), c);
    }));

    const std::vector<Nest> nests = nests_up_to(cfg.max_n);
    report.absorb(sweep(nests.size(), cfg.mode, [&](std::uint64_t i, Collector& c) {
        const Nest& nest = nests[i];
        c.count_instance();
        auto inst = [&] { return nest_json(nest); };
        const Universe& u = nest.universe();
        const Relation strict = generated_order(nest);
        const Relation order = nest_order(nest);
        const Topology lower = lower_topology(order);
        const Topology upper = upper_topology(order);
        const Topology interval = interval_topology(order);
        const Topology tl = topology_from_subbase(nest);

        c.expect("prop3.6-alexandroff-formula", alexandroff_family(strict) == alexandroff_family_formula(nest), inst);
        c.expect("interval-is-join", interval == join(lower, upper) && interval == join(upper, lower), inst);
        c.expect("join-upper-bound", lower.coarser_than(interval) && upper.coarser_than(interval), inst);
        bool lower_subbase = true;
        bool upper_subbase = true;
        for (int x = 0; x < u.size(); ++x) {
            lower_subbase &= lower.is_open(Subset::full(u) - up_point(x, order));
            upper_subbase &= upper.is_open(Subset::full(u) - down_point(x, order));
        }
        c.expect("lower-subbase-open", lower_subbase, inst);
        c.expect("upper-subbase-open", upper_subbase, inst);

        std::vector<int> id(static_cast<std::size_t>(u.size()));
        std::iota(id.begin(), id.end(), 0);
        c.expect("identity-continuous", is_continuous(id, tl, tl) && is_continuous(id, interval, lower), inst);
        bool constants = true;
        for (int k = 0; k < u.size(); ++k) {
            constants &= is_continuous(std::vector<int>(static_cast<std::size_t>(u.size()), k), tl, interval);
        }
        c.expect("constant-maps-continuous", constants, inst);
        if (u.size() <= 3) {
            const Topology prod = product_topology(tl, interval);
            std::vector<int> p1;
            std::vector<int> p2;
            for (int a = 0; a < u.size(); ++a) {
                for (int b = 0; b < u.size(); ++b) {
                    p1.push_back(a);
                    p2.push_back(b);
                }
            }
            c.expect("product-projections-continuous", is_continuous(p1, prod, tl) && is_continuous(p2, prod, interval),
                     inst);
        }
    }));
    return report;
}

}  // namespace nests::harness::detail
