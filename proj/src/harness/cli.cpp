#include "nests/harness/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nests/bounds.hpp"
#include "nests/errors.hpp"
#include "nests/group.hpp"
#include "nests/harness/examples.hpp"
#include "nests/harness/search.hpp"
#include "nests/harness/suites.hpp"
#include "nests/json_io.hpp"
#include "nests/nest_analysis.hpp"
#include "nests/ray_nests.hpp"
#include "nests/roster.hpp"

namespace nests::harness {

namespace {

// Rosters of topologies are printed only up to this many points.
constexpr int kMaxRosterPoints = 8;

void write_json_file(const std::string& path, const json& j, std::ostream& out) {
    if (path == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInstance("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

// Flattens nested objects into aligned "a.b  value" lines.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

void print_text(const json& j, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

void emit(const json& j, bool as_json, std::ostream& out) {
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        print_text(j, out);
    }
}

json topology_json(const Topology& t) {
    json j = {{"open_count", t.open_count()}};
    if (t.universe().size() <= kMaxRosterPoints) j["opens"] = roster(t);
    return j;
}

json conditions_json(const Conditions& c) { return {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}}; }

json analyze_nest(const Nest& n, const std::optional<SetFamily>& dual) {
    const Universe& u = n.universe();
    const Relation strict = generated_order(n);
    const Relation order = nest_order(n);
    json j;
    j["kind"] = "nest";
    j["universe"] = u.size();
    j["family"] = roster(n.family());
    j["t0"] = t0_separates(n);
    j["t1"] = t1_separates(n);
    j["order"] = roster(strict);
    j["linear"] = is_linear_order(order);
    j["conditions"] = conditions_json(check_conditions(n));
    j["interlocking"] = {{"definition", is_interlocking_def(n.family())},
                         {"alexandroff", is_interlocking_alexandroff(n)},
                         {"lower_sets", is_interlocking_lowersets(n)}};
    json tops;
    tops["subbase"] = topology_json(topology_from_subbase(n.family()));
    tops["lower"] = topology_json(lower_topology(order));
    tops["upper"] = topology_json(upper_topology(order));
    tops["interval"] = topology_json(interval_topology(order));
    tops["open_ray"] = topology_json(open_ray_topology(order));
    j["topologies"] = tops;
    if (dual) {
        const Nest r(*dual);
        const DualNestPair pair = make_dual_pair(n, r);
        std::vector<Subset> both(n.begin(), n.end());
        both.insert(both.end(), r.begin(), r.end());
        const LotsReport lots = lots_check(pair);
        j["dual"] = {{"family", roster(r.family())},
                     {"t0", t0_separates(r)},
                     {"conditions_star", conditions_json(check_conditions_star(pair))},
                     {"subbase", topology_json(topology_from_subbase(r.family()))},
                     {"joint_subbase", topology_json(topology_from_subbase(SetFamily::deduplicated(u, both)))}};
        j["lots"] = {{"c3_pair", lots.c3_pair},
                     {"t0_c2_pair", lots.t0_c2_pair},
                     {"hypotheses", lots.hypotheses},
                     {"linear", lots.linear},
                     {"subbase_matches_rays", lots.subbase_matches_rays},
                     {"conclusion", lots.conclusion}};
    }
    return j;
}

json analyze_family(const Instance& inst) {
    const SetFamily& f = inst.family;
    const Relation strict = generated_order(f);
    json j;
    j["kind"] = to_string(inst.kind);
    j["universe"] = f.universe().size();
    j["family"] = roster(f);
    j["nest"] = is_nest(f);
    j["t0"] = t0_separates(f);
    j["t1"] = t1_separates(f);
    j["order"] = roster(strict);
    j["transitive"] = is_transitive(strict);
    j["composition_condition"] = composition_condition(f);
    j["interlocking"] = {{"definition", is_interlocking_def(f)}};
    j["topologies"] = {{"subbase", topology_json(topology_from_subbase(f))}};
    return j;
}

json analyze(const Instance& inst) {
    if (inst.kind == InstanceKind::nest || (inst.kind == InstanceKind::family && is_nest(inst.family)))
        return analyze_nest(Nest(inst.family), inst.dual);
    return analyze_family(inst);
}

json cover_json(const CoverWitness& w, const Universe& u) {
    json j = {{"holds", w.holds}};
    if (w.witness_family) j["witness_family"] = roster(*w.witness_family);
    if (w.violating_member) j["violating_member"] = roster(*w.violating_member, u);
    return j;
}

FiniteGroup load_group(const std::string& spec) {
    if (std::filesystem::exists(spec)) return group_from_json(load_json_file(spec));
    return FiniteGroup::builtin(spec);
}

Instance load_instance(const std::string& path) { return instance_from_json(load_json_file(path)); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nests, generated orders and their topologies on finite sets"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string suite;
    std::string json_path;
    bool serial = false;
    auto* check = app.add_subcommand("check", "Run a property suite");
    check->add_option("--suite", suite, "Suite name")->required();
    check->add_option("--max-n", cfg.max_n, "Largest universe in exhaustive sweeps");
    check->add_option("--random-max-n", cfg.random_max_n, "Largest universe in random sweeps");
    check->add_option("--seed", cfg.seed, "Generator seed");
    check->add_option("--iters", cfg.iters, "Random instances per sweep");
    check->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    check->add_flag("--serial", serial, "Disable the OpenMP sweep");
    check->add_flag("--timing", cfg.timing, "Include wall time in the report");

    SearchSpec spec;
    std::string mode = "exhaustive";
    auto* search_cmd = app.add_subcommand("search", "Search for witnesses and counterexamples");
    search_cmd->add_option("--property", spec.property, "Search target")->required();
    search_cmd->add_option("--max-n", spec.max_n, "Largest universe");
    search_cmd->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--seed", spec.seed, "Generator seed");
    search_cmd->add_option("--iters", spec.iters, "Samples in random mode");
    search_cmd->add_option("--budget", spec.budget, "Instances examined before stopping");
    search_cmd->add_option("--max-nest-size", spec.max_nest_size, "Member cap for nests");
    search_cmd->add_option("--group", spec.group, "Built-in group for the group target");
    search_cmd->add_option("--out", spec.out_dir, "Directory for witness instance files");
    search_cmd->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
    search_cmd->add_flag("--serial", serial, "Disable the OpenMP sweep");

    std::string example;
    bool as_json = false;
    auto* demo = app.add_subcommand("demo", "Replay a worked example");
    demo->add_option("--example", example, "Example id")->required();
    demo->add_flag("--json", as_json, "JSON output");

    std::string input;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a family, nest or topology instance");
    analyze_cmd->add_option("--input", input, "Instance file")->required();
    analyze_cmd->add_flag("--json", as_json, "JSON output");

    std::string subset;
    auto* bounds_cmd = app.add_subcommand("bounds", "Cover characterizations for a subset of a nest");
    bounds_cmd->add_option("--input", input, "Nest instance file")->required();
    bounds_cmd->add_option("--subset", subset, "Subset Y, e.g. \"{x1, x3}\"")->required();
    bounds_cmd->add_flag("--json", as_json, "JSON output");

    std::string group;
    std::string right;
    std::string prop;
    auto* group_cmd = app.add_subcommand("group-check", "Group compatibility and continuity checks");
    group_cmd->add_option("--group", group, "Group file or built-in name (Z<n>, Z2xZ2, S3, D4)")->required();
    group_cmd->add_option("--nest", input, "Left nest or family file")->required();
    group_cmd->add_option("--right", right, "Right family file (defaults to the left one's dual field)");
    group_cmd->add_option("--prop", prop, "5.1, 5.2 or 5.3")->required()->check(CLI::IsMember({"5.1", "5.2", "5.3"}));
    group_cmd->add_flag("--json", as_json, "JSON output");

    auto* ray_cmd = app.add_subcommand("ray", "Analyze a symbolic ray nest");
    ray_cmd->add_option("--input", input, "Ray nest file")->required();
    ray_cmd->add_flag("--json", as_json, "JSON output");

    auto* list_cmd = app.add_subcommand("list", "List suites, search targets and examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            if (serial) cfg.mode = ExecMode::serial;
            const SuiteReport r = run_suite(suite, cfg);
            out << r.to_text();
            if (!json_path.empty()) write_json_file(json_path, r.to_json(), out);
            return r.passed() ? kExitPass : kExitViolation;
        }
        if (search_cmd->parsed()) {
            spec.mode = mode == "random" ? SearchMode::random : SearchMode::exhaustive;
            if (serial) spec.exec = ExecMode::serial;
            const SuiteReport r = search(spec);
            out << r.to_text();
            if (!json_path.empty()) write_json_file(json_path, r.to_json(), out);
            return r.passed() ? kExitPass : kExitViolation;
        }
        if (demo->parsed()) {
            const ExampleReport r = run_example(example);
            if (as_json) {
                out << r.to_json().dump(2) << "\n";
            } else {
                out << r.to_text();
            }
            return r.passed() ? kExitPass : kExitViolation;
        }
        if (analyze_cmd->parsed()) {
            emit(analyze(load_instance(input)), as_json, out);
            return kExitPass;
        }
        if (bounds_cmd->parsed()) {
            const Instance inst = load_instance(input);
            if (!is_nest(inst.family)) throw InvalidInstance("bounds needs a nest");
            const Nest n(inst.family);
            const Universe& u = n.universe();
            const Subset y = parse_subset(subset, u);
            json j;
            j["subset"] = roster(y, u);
            j["down_covers_X"] = cover_json(down_covers_X(n, y), u);
            j["up_covers_X"] = cover_json(up_covers_X(n, y), u);
            j["upper_bound_outside"] = has_upper_bound_outside(n, y);
            j["lower_bound_outside"] = has_lower_bound_outside(n, y);
            j["upper_bound"] = has_upper_bound(n, y);
            j["lower_bound"] = has_lower_bound(n, y);
            j["single_subcover_clause"] = single_subcover_clause(n, y);
            emit(j, as_json, out);
            return kExitPass;
        }
        if (group_cmd->parsed()) {
            const FiniteGroup g = load_group(group);
            const Instance inst = load_instance(input);
            if (!inst.family.universe().compatible(g.universe()))
                throw UniverseMismatch("the nest and the group have different sizes");
            json j = {{"group", g.name()}, {"prop", prop}};
            bool violated = false;
            if (prop == "5.1") {
                if (!is_nest(inst.family)) throw InvalidInstance("prop 5.1 needs a nest");
                const Nest n(inst.family);
                const bool premise = prop51_premise(g, n);
                const Compatibility c = order_compatibility(g, n);
                j["premise"] = premise;
                j["compatible"] = c.compatible;
                j["t0_separating"] = c.t0_separating;
                if (c.witness) j["witness"] = *c.witness;
                violated = premise && !c.compatible;
            } else {
                const SetFamily r = !right.empty() ? load_instance(right).family : inst.dual.value_or(inst.family);
                const ContinuityCheck c = prop == "5.2" ? inversion_continuity_check(g, inst.family, r)
                                                        : multiplication_continuity_check(g, inst.family, r);
                j["right"] = roster(r);
                j["premise"] = c.premise;
                j["conclusion"] = c.conclusion;
                violated = c.premise && !c.conclusion;
            }
            j["status"] = violated ? "fail" : "pass";
            emit(j, as_json, out);
            return violated ? kExitViolation : kExitPass;
        }
        if (ray_cmd->parsed()) {
            const RayNest n = ray_nest_from_json(load_json_file(input));
            const RayConditions c = ray_check_conditions(n);
            const RayT0 t0 = ray_t0(n);
            const RayDualPair pair = ray_dual_pair(n);
            json j;
            j["conditions"] = {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}};
            j["t0"] = t0.separating;
            if (t0.witness) j["t0_witness"] = "(" + to_string(t0.witness->first) + ", " + to_string(t0.witness->second) + ")";
            j["dual_conditions"] = {{"c1", pair.right_conditions.c1},
                                    {"c2", pair.right_conditions.c2},
                                    {"c3", pair.right_conditions.c3}};
            if (n.carrier.window.full_line()) {
                for (const auto& [name, op] : {std::pair{"add", GroupOp::add}, std::pair{"multiply", GroupOp::multiply}}) {
                    const RayGroupCompat g = ray_group_compat(op, n);
                    json gj = {{"premise", g.premise}, {"compatible", g.compatible}};
                    if (g.witness) {
                        const auto& [a, b, x] = *g.witness;
                        gj["witness"] = "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(x) + ")";
                    }
                    j["group"][name] = gj;
                }
            }
            emit(j, as_json, out);
            return kExitPass;
        }
        if (list_cmd->parsed()) {
            json j = {{"suites", suite_names()}, {"search_targets", search_targets()}, {"examples", example_ids()}};
            out << j.dump(2) << "\n";
            return kExitPass;
        }
    } catch (const DualityViolation& e) {
        err << "error: " << e.what() << " (witness " << e.witness.first << ", " << e.witness.second << ")\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nests::harness
