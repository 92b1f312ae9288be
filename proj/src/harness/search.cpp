#include "nests/harness/search.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include "nests/errors.hpp"
#include "nests/group.hpp"
#include "nests/harness/generators.hpp"
#include "nests/harness/suites.hpp"
#include "nests/nest_analysis.hpp"
#include "suite_common.hpp"

namespace nests::harness {

namespace {

using detail::nest_json;
using detail::pair_json;

bool all_members_empty(const SetFamily& f) {
    return std::all_of(f.begin(), f.end(), [](Subset s) { return s.empty(); });
}

// Instance sources shared by the targets.
struct Space {
    std::vector<Nest> nests;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::vector<Nest> source_nests(const SearchSpec& spec) {
    if (spec.mode == SearchMode::exhaustive) return detail::nests_up_to(spec.max_n, spec.max_nest_size);
    std::vector<Nest> out;
    for (std::uint64_t i = 0; i < spec.iters; ++i) {
        Rng rng = instance_rng(spec.seed, i);
        Nest n = random_nest(rng, Universe(uniform_int(rng, 1, spec.max_n)));
        if (!spec.max_nest_size || n.size() <= *spec.max_nest_size) out.push_back(std::move(n));
    }
    return out;
}

// Dual pairs: every matching pair when exhaustive, the complement partner when sampling.
Space source_pairs(const SearchSpec& spec) {
    Space s;
    s.nests = source_nests(spec);
    if (spec.mode == SearchMode::exhaustive) {
        s.pairs = detail::dual_pairs(s.nests);
        return s;
    }
    const std::size_t n = s.nests.size();
    for (std::size_t i = 0; i < n; ++i) {
        s.nests.push_back(family_complement(s.nests[i]));
        s.pairs.emplace_back(i, n + i);
    }
    return s;
}

std::uint64_t limited(std::uint64_t count, const SearchSpec& spec, SuiteReport& report) {
    if (spec.budget && *spec.budget < count) {
        report.incomplete = true;
        return *spec.budget;
    }
    return count;
}

Collector search_c3(const SearchSpec& spec, SuiteReport& report) {
    const std::vector<Nest> nests = source_nests(spec);
    return sweep(limited(nests.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const Nest& n = nests[i];
        c.count_instance();
        const bool c3 = check_C3(n);
        if (c3) c.witness("c3-nontrivial-finite", nest_json(n));
        c.check("structural-c3-singleton", c3, n.universe().size() == 1 && n.sets() == std::vector<Subset>{Subset()},
                [&] { return nest_json(n); });
    });
}

Collector search_c2_nonempty(const SearchSpec& spec, SuiteReport& report) {
    const std::vector<Nest> nests = source_nests(spec);
    return sweep(limited(nests.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const Nest& n = nests[i];
        c.count_instance();
        const bool hit = check_C2(n) && !all_members_empty(n);
        if (hit) c.witness("c2-nonempty-finite", nest_json(n));
        c.check("structural-c2-t0-empty", hit, !t0_separates(n), [&] { return nest_json(n); });
    });
}

Collector search_interlocking(const SearchSpec& spec, SuiteReport& report) {
    const std::vector<Nest> nests = source_nests(spec);
    return sweep(limited(nests.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const Nest& n = nests[i];
        c.count_instance();
        const bool def = is_interlocking_def(n.family());
        const bool alex = is_interlocking_alexandroff(n);
        const bool lower = is_interlocking_lowersets(n);
        c.expect("thm3.4-equivalence", def == alex && alex == lower, [&] { return nest_json(n); },
                 std::string("definition ") + (def ? "true" : "false") + ", alexandroff " + (alex ? "true" : "false") +
                     ", lower sets " + (lower ? "true" : "false"));
    });
}

Collector search_remark41(const SearchSpec& spec, SuiteReport& report) {
    const std::vector<Nest> nests = source_nests(spec);
    return sweep(limited(nests.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const Nest& n = nests[i];
        c.count_instance();
        if (!t0_separates(n)) return;
        const Relation strict = generated_order(n);
        const Subset x = Subset::full(n.universe());
        for (std::uint64_t bits = 0; bits < x.bits; ++bits) {
            const Subset y(bits);
            const bool down_all = down_set_strict(y, strict) == x;
            bool bound = false;
            for (int e = 0; e < n.universe().size(); ++e) bound |= y.subset_of(strict.predecessors(e));
            c.expect("remark4.1-strict", !down_all == bound, [&] { return detail::with_subset(nest_json(n), y); },
                     std::string("strict upper bound ") + (bound ? "exists" : "missing") + ", X = down(Y) " +
                         (down_all ? "true" : "false"));
        }
    });
}

Collector search_pairs(const SearchSpec& spec, SuiteReport& report, bool open_question) {
    const Space s = source_pairs(spec);
    report.bounds["dual_pairs"] = s.pairs.size();
    return sweep(limited(s.pairs.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const Nest& l = s.nests[s.pairs[i].first];
        const Nest& r = s.nests[s.pairs[i].second];
        c.count_instance();
        const DualNestPair pair = make_dual_pair(l, r);
        const Conditions cl = check_conditions(l);
        const Conditions cr = check_conditions_star(pair);
        auto inst = [&] { return pair_json(l.family(), r.family()); };
        if (open_question) {
            const LotsReport lots = lots_check(pair);
            if (lots.conclusion && !lots.hypotheses) c.witness("open-q1-candidate", inst());
            c.check("cor3.1-lots", lots.hypotheses, lots.conclusion, inst);
            return;
        }
        const bool c2_pair = cl.c2 && cr.c2;
        const bool c3_pair = cl.c3 && cr.c3;
        if (c2_pair || c3_pair) c.witness("thm3.3-hypotheses-true", inst());
        c.check("structural-c2-pair-empty", c2_pair, all_members_empty(l) && all_members_empty(r), inst);
        const Relation order = nest_order(l);
        std::vector<Subset> both(l.begin(), l.end());
        both.insert(both.end(), r.begin(), r.end());
        const Topology tlr = topology_from_subbase(SetFamily::deduplicated(l.universe(), both));
        const Topology tin = interval_topology(order);
        c.check("thm3.3-1", c2_pair, tlr.coarser_than(tin), inst);
        c.check("thm3.3-2", c3_pair, tlr == tin, inst);
    });
}

Collector search_prop51(const SearchSpec& spec, SuiteReport& report) {
    std::vector<FiniteGroup> groups;
    if (spec.group) {
        groups.push_back(FiniteGroup::builtin(*spec.group));
    } else {
        groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::klein(),
                  FiniteGroup::symmetric3()};
    }
    std::vector<std::pair<std::size_t, Nest>> items;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Universe u = groups[gi].universe();
        if (spec.mode == SearchMode::exhaustive) {
            NestEnumeration opts;
            opts.bound = kMaxEnumerationBound;
            opts.max_members = spec.max_nest_size.value_or(u.size() <= 4 ? std::size_t(u.size() + 1) : 3);
            for (Nest& n : enumerate_nests(u, opts)) items.emplace_back(gi, std::move(n));
        } else {
            for (std::uint64_t i = 0; i < spec.iters; ++i) {
                Rng rng = instance_rng(spec.seed + gi, i);
                items.emplace_back(gi, random_nest(rng, u));
            }
        }
    }
    report.bounds["groups"] = json::array();
    for (const FiniteGroup& g : groups) report.bounds["groups"].push_back(g.name());
    return sweep(limited(items.size(), spec, report), spec.exec, [&](std::uint64_t i, Collector& c) {
        const FiniteGroup& g = groups[items[i].first];
        const Nest& n = items[i].second;
        c.count_instance();
        if (!prop51_premise(g, n)) return;
        json j = nest_json(n);
        j["group"] = g.name();
        c.witness("prop5.1-premise-nontrivial", j);
        const Subset full = Subset::full(g.universe());
        c.expect("prop5.1-structural", std::all_of(n.begin(), n.end(), [&](Subset s) { return s.empty() || s == full; }),
                 [&] { return j; });
        c.expect("prop5.1", order_compatible(g, n), [&] { return j; });
    });
}

const std::map<std::string, std::function<Collector(const SearchSpec&, SuiteReport&)>>& targets() {
    static const std::map<std::string, std::function<Collector(const SearchSpec&, SuiteReport&)>> t = {
        {"prop5.1-premise-nontrivial", search_prop51},
        {"c3-nontrivial-finite", search_c3},
        {"thm3.3-hypotheses-true", [](const SearchSpec& s, SuiteReport& r) { return search_pairs(s, r, false); }},
        {"thm3.4-equivalence", search_interlocking},
        {"open-q1-candidate", [](const SearchSpec& s, SuiteReport& r) { return search_pairs(s, r, true); }},
        {"c2-nonempty-finite", search_c2_nonempty},
        {"remark4.1-strict", search_remark41},
    };
    return t;
}

std::size_t persist(const std::vector<Finding>& findings, const std::string& kind, const std::string& dir) {
    std::map<std::string, std::size_t> next;
    for (const Finding& f : findings) {
        char name[64];
        std::snprintf(name, sizeof name, "-%s-%05zu.json", kind.c_str(), next[f.property]++);
        std::ofstream out(std::filesystem::path(dir) / (f.property + name));
        if (!out) throw InvalidInstance("cannot write into '" + dir + "'");
        out << f.instance.dump(2) << "\n";
    }
    return findings.size();
}

}  // namespace

const std::vector<std::string>& search_targets() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : targets()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport search(const SearchSpec& spec) {
    const auto it = targets().find(spec.property);
    if (it == targets().end()) throw Unsupported("unknown search target '" + spec.property + "'");
    const int limit = spec.mode == SearchMode::exhaustive ? kMaxExhaustiveN : kMaxRandomN;
    if (spec.max_n < 1 || spec.max_n > limit)
        throw BoundExceeded("search bound must lie in [1, " + std::to_string(limit) + "] in " +
                            (spec.mode == SearchMode::exhaustive ? "exhaustive" : "random") + " mode, got " +
                            std::to_string(spec.max_n));

    SuiteReport report;
    report.suite = "search:" + spec.property;
    report.seed = spec.seed;
    report.bounds = {{"max_n", spec.max_n},
                     {"mode", spec.mode == SearchMode::exhaustive ? "exhaustive" : "random"}};
    if (spec.mode == SearchMode::random) report.bounds["iters"] = spec.iters;
    if (spec.max_nest_size) report.bounds["max_nest_size"] = *spec.max_nest_size;
    if (spec.budget) report.bounds["budget"] = *spec.budget;

    const Collector found = it->second(spec, report);
    if (spec.out_dir) {
        std::filesystem::create_directories(*spec.out_dir);
        const std::size_t files =
            persist(found.witnesses(), "witness", *spec.out_dir) + persist(found.violations(), "counterexample", *spec.out_dir);
        report.notes.push_back("persisted " + std::to_string(files) + " instance files");
    }
    report.absorb(found);
    return report;
}

}  // namespace nests::harness
