// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 every criterion
//   acceptance --criterion K   criterion K only (exit 1 on FAIL)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nests/harness/examples.hpp"
#include "nests/harness/search.hpp"
#include "nests/harness/suites.hpp"

using namespace nests::harness;

namespace {

// Runtime ceilings in seconds, one per criterion; 7 has none.
constexpr double kLimitExamples = 1.0;
constexpr double kLimitInterlocking = 60.0;
constexpr double kLimitOrder = 60.0;
constexpr double kLimitConditions = 120.0;
constexpr double kLimitBounds = 60.0;
constexpr double kLimitGroups = 120.0;

constexpr std::uint64_t kRandomIters = 10000;
constexpr int kRandomMaxN = 6;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Timed {
    SuiteReport report;
    double seconds = 0;
};

Timed timed_suite(const std::string& name, const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r = run_suite(name, cfg);
    return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// Violated property ids with their counts.
std::string violation_summary(const SuiteReport& r) {
    std::ostringstream os;
    for (const auto& [id, c] : r.properties) {
        if (c.violations) os << " " << id << "=" << c.violations;
    }
    return os.str();
}

Outcome verdict(const Timed& t, double limit, std::string extra = {}, bool extra_ok = true) {
    const bool in_time = t.seconds < limit;
    Outcome o;
    o.pass = t.report.passed() && in_time && extra_ok;
    o.detail = t.report.suite + ": " + std::to_string(t.report.instances) + " instances, " +
               std::to_string(t.report.violation_total) + " violations" + violation_summary(t.report) + ", " +
               fmt_seconds(t.seconds) + " (limit " + fmt_seconds(limit) + ")";
    if (!extra.empty()) o.detail += "; " + extra;
    return o;
}

std::uint64_t fired(const SuiteReport& r, const std::string& id) {
    const auto it = r.properties.find(id);
    return it == r.properties.end() ? 0 : it->second.fired;
}

std::uint64_t checked(const SuiteReport& r, const std::string& id) {
    const auto it = r.properties.find(id);
    return it == r.properties.end() ? 0 : it->second.checked;
}

Outcome criterion_examples() {
    SuiteConfig cfg;
    const Timed t = timed_suite("paper-examples", cfg);
    std::size_t checks = 0;
    for (const auto& [id, c] : t.report.properties) checks += c.checked;
    const bool all_ran = t.report.instances == example_ids().size();
    return verdict(t, kLimitExamples, std::to_string(t.report.instances) + " examples, " + std::to_string(checks) + " checks",
                   all_ran);
}

Outcome criterion_interlocking() {
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.iters = kRandomIters;
    cfg.random_max_n = kRandomMaxN;
    const Timed t = timed_suite("interlocking-triple", cfg);
    return verdict(t, kLimitInterlocking);
}

Outcome criterion_order() {
    SuiteConfig cfg;
    cfg.max_n = 3;
    cfg.iters = kRandomIters;
    cfg.random_max_n = kRandomMaxN;
    const Timed t = timed_suite("generated-order", cfg);
    const bool covered = checked(t.report, "lemma2.1-product-form") > 0 && checked(t.report, "prop2.3-star-union") > 0 &&
                         checked(t.report, "remark1.1-transpose") > 0 && checked(t.report, "prop2.2-t0-product") > 0 &&
                         fired(t.report, "cor2.1-nest-implies-condition") > 0;
    return verdict(t, kLimitOrder, covered ? "" : "a cited property was never evaluated", covered);
}

Outcome criterion_conditions() {
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.iters = kRandomIters;
    cfg.random_max_n = kRandomMaxN;
    const Timed t = timed_suite("nest-conditions", cfg);
    std::size_t structural = 0;
    bool verified = true;
    for (const std::string& note : t.report.notes) {
        if (note.rfind("structural:", 0) != 0) continue;
        ++structural;
        verified &= note.find("REFUTED") == std::string::npos;
    }
    const bool lemma_ran = fired(t.report, "lemma3.1-1") > 0;
    return verdict(t, kLimitConditions,
                   std::to_string(structural) + " structural notes" + (verified ? ", all verified" : ", some refuted"),
                   structural >= 3 && verified && lemma_ran);
}

Outcome criterion_bounds() {
    SuiteConfig cfg;
    cfg.max_n = 4;
    cfg.iters = kRandomIters;
    cfg.random_max_n = kRandomMaxN;
    const Timed t = timed_suite("bounds", cfg);
    return verdict(t, kLimitBounds);
}

Outcome criterion_groups() {
    SuiteConfig cfg;
    cfg.iters = kRandomIters;
    const Timed t = timed_suite("groups", cfg);
    const bool witness = checked(t.report, "z3-incompatibility-witness") == 1;
    return verdict(t, kLimitGroups, witness ? "Z3 witness reproduced" : "Z3 witness missing", witness);
}

Outcome criterion_determinism() {
    SuiteConfig cfg;
    cfg.max_n = 3;
    cfg.iters = 2000;
    std::vector<std::string> differing;
    std::size_t compared = 0;
    for (const std::string& name : suite_names()) {
        SuiteConfig par = cfg;
        SuiteConfig ser = cfg;
        ser.mode = ExecMode::serial;
        const std::string a = run_suite(name, par).to_json().dump();
        const std::string b = run_suite(name, par).to_json().dump();
        const std::string c = run_suite(name, ser).to_json().dump();
        ++compared;
        if (a != b || a != c) differing.push_back(name);
    }
    SearchSpec spec;
    spec.property = "open-q1-candidate";
    spec.max_n = 3;
    const std::string s1 = search(spec).to_json().dump();
    spec.exec = ExecMode::serial;
    const std::string s2 = search(spec).to_json().dump();
    ++compared;
    if (s1 != s2) differing.push_back("search:" + spec.property);

    Outcome o;
    o.pass = differing.empty();
    o.detail = std::to_string(compared) + " reports compared across repeated and serial runs";
    for (const std::string& d : differing) o.detail += "; differs: " + d;
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> c = {
        {"example replay", criterion_examples},
        {"interlocking triple equivalence", criterion_interlocking},
        {"generated order suite", criterion_order},
        {"condition implications and structural report", criterion_conditions},
        {"bound characterizations", criterion_bounds},
        {"group compatibility and continuity", criterion_groups},
        {"determinism", criterion_determinism},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (std::size_t k = 0; k < criteria().size(); ++k) {
        if (only && static_cast<std::size_t>(only) != k + 1) continue;
        Outcome o;
        try {
            o = criteria()[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass &= o.pass;
        std::cout << "criterion " << (k + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria()[k].first
                  << ": " << o.detail << std::endl;
    }
    return all_pass ? 0 : 1;
}
