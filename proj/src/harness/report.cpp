#include "nests/harness/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "nests/harness/sweep.hpp"

namespace nests::harness {

bool operator<(const Finding& a, const Finding& b) {
    if (a.property != b.property) return a.property < b.property;
    const std::string da = a.instance.dump();
    const std::string db = b.instance.dump();
    if (da != db) return da < db;
    return a.detail < b.detail;
}

void Collector::merge(Collector&& other) {
    instances_ += other.instances_;
    for (const auto& [id, c] : other.counts_) {
        PropertyCounts& mine = counts_[id];
        mine.checked += c.checked;
        mine.fired += c.fired;
        mine.violations += c.violations;
    }
    violations_.insert(violations_.end(), std::make_move_iterator(other.violations_.begin()),
                       std::make_move_iterator(other.violations_.end()));
    witnesses_.insert(witnesses_.end(), std::make_move_iterator(other.witnesses_.begin()),
                      std::make_move_iterator(other.witnesses_.end()));
}

void Collector::finalize() {
    std::sort(violations_.begin(), violations_.end());
    std::sort(witnesses_.begin(), witnesses_.end());
}

namespace {

// Keeps at most kMaxListedPerProperty findings per property from a sorted list.
void append_capped(std::vector<Finding>& into, const std::vector<Finding>& sorted) {
    std::map<std::string, std::size_t> listed;
    for (const Finding& f : into) ++listed[f.property];
    for (const Finding& f : sorted) {
        if (listed[f.property]++ < kMaxListedPerProperty) into.push_back(f);
    }
    std::sort(into.begin(), into.end());
}

json findings_to_json(const std::vector<Finding>& list) {
    json arr = json::array();
    for (const Finding& f : list) {
        json item = {{"property", f.property}, {"instance", f.instance}};
        if (!f.detail.empty()) item["detail"] = f.detail;
        arr.push_back(item);
    }
    return arr;
}

}  // namespace

void SuiteReport::absorb(const Collector& c) {
    instances += c.instances();
    for (const auto& [id, counts] : c.counts()) {
        PropertyCounts& mine = properties[id];
        mine.checked += counts.checked;
        mine.fired += counts.fired;
        mine.violations += counts.violations;
        violation_total += counts.violations;
    }
    append_capped(violations, c.violations());
    append_capped(witnesses, c.witnesses());
    witness_total += c.witnesses().size();
}

json SuiteReport::to_json() const {
    json props = json::array();
    for (const auto& [id, c] : properties) {
        props.push_back({{"id", id}, {"checked", c.checked}, {"fired", c.fired}, {"violations", c.violations}});
    }
    json j = {
        {"suite", suite},
        {"seed", seed},
        {"bounds", bounds},
        {"instances", instances},
        {"properties", props},
        {"violation_total", violation_total},
        {"violations", findings_to_json(violations)},
        {"status", passed() ? "pass" : "fail"},
    };
    if (witness_total > 0 || !witnesses.empty()) {
        j["witness_total"] = witness_total;
        j["witnesses"] = findings_to_json(witnesses);
    }
    if (!notes.empty()) j["notes"] = notes;
    if (incomplete) j["incomplete"] = true;
    if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << "  seed " << seed << "  bounds " << bounds.dump() << "\n";
    std::size_t width = 8;
    for (const auto& [id, c] : properties) width = std::max(width, id.size());
    char line[256];
    std::snprintf(line, sizeof line, "  %-*s %12s %12s %10s\n", static_cast<int>(width), "property", "checked",
                  "fired", "violations");
    out << line;
    for (const auto& [id, c] : properties) {
        std::snprintf(line, sizeof line, "  %-*s %12llu %12llu %10llu\n", static_cast<int>(width), id.c_str(),
                      static_cast<unsigned long long>(c.checked), static_cast<unsigned long long>(c.fired),
                      static_cast<unsigned long long>(c.violations));
        out << line;
    }
    for (const Finding& f : violations) {
        out << "  violation " << f.property << ": " << f.instance.dump();
        if (!f.detail.empty()) out << "  (" << f.detail << ")";
        out << "\n";
    }
    if (violation_total > violations.size())
        out << "  ... " << violation_total - violations.size() << " more violations not listed\n";
    if (witness_total > 0) out << "  witnesses: " << witness_total << "\n";
    for (const std::string& n : notes) out << "  note: " << n << "\n";
    if (incomplete) out << "  incomplete: budget exhausted\n";
    if (wall_time_ms) out << "  wall time: " << *wall_time_ms << " ms\n";
    out << "  instances " << instances << ", status " << (passed() ? "pass" : "fail") << "\n";
    return out.str();
}

int worker_count() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace nests::harness
