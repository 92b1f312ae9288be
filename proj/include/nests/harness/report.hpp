#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nests/json_io.hpp"

namespace nests::harness {

/// Violations kept per property in a report; the counts stay exact.
inline constexpr std::size_t kMaxListedPerProperty = 25;

struct PropertyCounts {
    std::uint64_t checked = 0;     ///< evaluations
    std::uint64_t fired = 0;       ///< evaluations whose antecedent held
    std::uint64_t violations = 0;  ///< fired evaluations whose consequent failed
};

struct Finding {
    std::string property;
    json instance;
    std::string detail;

    friend bool operator<(const Finding& a, const Finding& b);
};

/// Per-worker accumulator of property outcomes. Merging is order-independent
/// once finalize() has sorted the findings.
class Collector {
public:
    /// Records an implication check. `make_instance` is only invoked for a violation.
    template <class MakeInstance>
    void check(const std::string& property, bool fired, bool held, MakeInstance&& make_instance,
               std::string detail = {}) {
        PropertyCounts& c = counts_[property];
        ++c.checked;
        if (!fired) return;
        ++c.fired;
        if (held) return;
        ++c.violations;
        violations_.push_back({property, make_instance(), std::move(detail)});
    }

    /// Records an unconditional property.
    template <class MakeInstance>
    void expect(const std::string& property, bool held, MakeInstance&& make_instance, std::string detail = {}) {
        check(property, true, held, std::forward<MakeInstance>(make_instance), std::move(detail));
    }

    /// Records an object of interest that is not a failure (search hits).
    void witness(const std::string& property, json instance, std::string detail = {}) {
        witnesses_.push_back({property, std::move(instance), std::move(detail)});
    }

    void count_instance(std::uint64_t k = 1) { instances_ += k; }

    void merge(Collector&& other);
    void finalize();

    std::uint64_t instances() const { return instances_; }
    const std::map<std::string, PropertyCounts>& counts() const { return counts_; }
    const std::vector<Finding>& violations() const { return violations_; }
    const std::vector<Finding>& witnesses() const { return witnesses_; }

private:
    std::uint64_t instances_ = 0;
    std::map<std::string, PropertyCounts> counts_;
    std::vector<Finding> violations_;
    std::vector<Finding> witnesses_;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    json bounds = json::object();
    std::uint64_t instances = 0;
    std::map<std::string, PropertyCounts> properties;
    std::vector<Finding> violations;  ///< sorted, at most kMaxListedPerProperty per property
    std::uint64_t violation_total = 0;
    std::vector<Finding> witnesses;   ///< sorted, at most kMaxListedPerProperty per property
    std::uint64_t witness_total = 0;
    std::vector<std::string> notes;
    bool incomplete = false;
    std::optional<double> wall_time_ms;  ///< left out unless timing was requested

    bool passed() const { return violation_total == 0; }

    /// Absorbs a finalized collector.
    void absorb(const Collector& c);

    json to_json() const;
    /// Aligned plain-text summary.
    std::string to_text() const;
};

}  // namespace nests::harness
