#include "nests/harness/suites.hpp"

#include <map>

#include "nests/errors.hpp"
#include "nests/harness/examples.hpp"
#include "suite_common.hpp"

namespace nests::harness {

namespace detail {

std::vector<Nest> nests_up_to(int max_n, std::optional<std::size_t> max_members) {
    std::vector<Nest> out;
    for (int n = 1; n <= max_n; ++n) {
        NestEnumeration opts;
        opts.bound = kMaxEnumerationBound;
        opts.max_members = max_members;
        for (Nest& nest : enumerate_nests(Universe(n), opts)) out.push_back(std::move(nest));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> dual_pairs(const std::vector<Nest>& nests) {
    auto key = [](const Relation& r) {
        std::vector<std::uint64_t> k{static_cast<std::uint64_t>(r.size())};
        for (int x = 0; x < r.size(); ++x) k.push_back(r.successors(x).bits);
        return k;
    };
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_order;
    std::vector<Relation> orders;
    orders.reserve(nests.size());
    for (std::size_t i = 0; i < nests.size(); ++i) {
        orders.push_back(generated_order(nests[i]));
        by_order[key(orders.back())].push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nests.size(); ++i) {
        const auto it = by_order.find(key(transpose(orders[i])));
        if (it == by_order.end()) continue;
        for (std::size_t j : it->second) out.emplace_back(i, j);
    }
    return out;
}

json nest_json(const Nest& n) { return to_json(n); }

json family_json(const SetFamily& f) { return to_json(f); }

json pair_json(const SetFamily& l, const SetFamily& r) {
    Instance inst;
    inst.kind = is_nest(l) ? InstanceKind::nest : InstanceKind::family;
    inst.family = l;
    if (is_nest(r)) {
        inst.dual = r;
        return to_json(inst);
    }
    json j = to_json(inst);
    j["partner"] = to_json(r)["family"];
    return j;
}

json with_subset(json j, Subset y) {
    j["subset"] = subset_to_json(y);
    return j;
}

std::uint64_t fubini(int n) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t binom = 1;
        for (int k = 1; k <= m; ++k) {
            binom = binom * static_cast<std::uint64_t>(m - k + 1) / static_cast<std::uint64_t>(k);
            a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - k)];
        }
    }
    return a[static_cast<std::size_t>(n)];
}

void require_bounds(const SuiteConfig& cfg) {
    if (cfg.max_n < 1 || cfg.max_n > kMaxExhaustiveN)
        throw BoundExceeded("exhaustive bound must lie in [1, " + std::to_string(kMaxExhaustiveN) + "], got " +
                            std::to_string(cfg.max_n));
    if (cfg.random_max_n < 1 || cfg.random_max_n > kMaxRandomN)
        throw BoundExceeded("random bound must lie in [1, " + std::to_string(kMaxRandomN) + "], got " +
                            std::to_string(cfg.random_max_n));
}

SuiteReport start_report(const std::string& name, const SuiteConfig& cfg, json extra_bounds) {
    SuiteReport r;
    r.suite = name;
    r.seed = cfg.seed;
    r.bounds = {{"max_n", cfg.max_n}, {"random_max_n", cfg.random_max_n}, {"iters", cfg.iters}};
    for (auto& [k, v] : extra_bounds.items()) r.bounds[k] = v;
    return r;
}

SuiteReport run_paper_examples(const SuiteConfig& cfg) {
    SuiteReport report = start_report("paper-examples", cfg);
    Collector c;
    for (const std::string& id : example_ids()) {
        const ExampleReport ex = run_example(id);
        c.count_instance();
        for (const ExampleCheck& check : ex.checks) {
            c.expect("example-" + id, check.pass(), [&] { return json{{"example", id}, {"check", check.label}}; },
                     "expected " + check.expected + ", got " + check.actual);
        }
    }
    c.finalize();
    report.absorb(c);
    return report;
}

}  // namespace detail

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "paper-examples", "finite-core",  "lemma2.1-product-form", "generated-order", "topo",
        "nest-conditions", "interlocking-triple", "bounds", "groups", "ray-nests",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    using Runner = SuiteReport (*)(const SuiteConfig&);
    static const std::map<std::string, Runner> runners = {
        {"paper-examples", detail::run_paper_examples},
        {"finite-core", detail::run_finite_core},
        {"lemma2.1-product-form", detail::run_product_form},
        {"generated-order", detail::run_generated_order},
        {"topo", detail::run_topo},
        {"nest-conditions", detail::run_nest_conditions},
        {"interlocking-triple", detail::run_interlocking},
        {"bounds", detail::run_bounds},
        {"groups", detail::run_groups},
        {"ray-nests", detail::run_ray_nests},
    };
    const auto it = runners.find(name);
    if (it == runners.end()) throw Unsupported("unknown suite '" + name + "'");
    detail::require_bounds(config);
    const detail::Stopwatch clock;
    SuiteReport report = it->second(config);
    if (config.timing) report.wall_time_ms = clock.elapsed_ms();
    return report;
}

}  // namespace nests::harness
