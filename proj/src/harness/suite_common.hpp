#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nests/harness/suites.hpp"
#include "nests/json_io.hpp"

namespace nests::harness::detail {

/// Every nest on universes of size 1..max_n, grouped by size in enumeration order.
std::vector<Nest> nests_up_to(int max_n, std::optional<std::size_t> max_members = std::nullopt);

/// Index pairs (l, r) into `nests` whose generated orders are mutual transposes.
std::vector<std::pair<std::size_t, std::size_t>> dual_pairs(const std::vector<Nest>& nests);

json nest_json(const Nest& n);
json family_json(const SetFamily& f);
json pair_json(const SetFamily& l, const SetFamily& r);
/// Adds the "subset" field that selects Y for the bounds command.
json with_subset(json j, Subset y);

/// Element indices as "[0,2]".
std::string roster_bits(Subset s);

/// Ordered Bell (Fubini) number by the binomial recurrence.
std::uint64_t fubini(int n);

/// Throws BoundExceeded unless the configuration is within the documented limits.
void require_bounds(const SuiteConfig& cfg);

/// Fills name, seed and bounds of a fresh report.
SuiteReport start_report(const std::string& name, const SuiteConfig& cfg, json extra_bounds = json::object());

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SuiteReport run_finite_core(const SuiteConfig& cfg);
SuiteReport run_product_form(const SuiteConfig& cfg);
SuiteReport run_generated_order(const SuiteConfig& cfg);
SuiteReport run_topo(const SuiteConfig& cfg);
SuiteReport run_nest_conditions(const SuiteConfig& cfg);
SuiteReport run_interlocking(const SuiteConfig& cfg);
SuiteReport run_bounds(const SuiteConfig& cfg);
SuiteReport run_groups(const SuiteConfig& cfg);
SuiteReport run_ray_nests(const SuiteConfig& cfg);
SuiteReport run_paper_examples(const SuiteConfig& cfg);

}  // namespace nests::harness::detail
