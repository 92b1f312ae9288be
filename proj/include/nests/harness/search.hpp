#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nests/harness/report.hpp"
#include "nests/harness/sweep.hpp"

namespace nests::harness {

enum class SearchMode { exhaustive, random };

struct SearchSpec {
    std::string property;
    int max_n = 4;                             ///< <= 4 exhaustive, <= 6 random
    std::optional<std::size_t> max_nest_size;  ///< member cap for enumerated nests
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 1;
    std::uint64_t iters = 10000;               ///< samples in random mode
    /// Instances examined before stopping; the report is then marked incomplete.
    std::optional<std::uint64_t> budget;
    /// Built-in group name for the group target; every small group when unset.
    std::optional<std::string> group;
    /// Directory receiving one instance file per witness and counterexample.
    std::optional<std::string> out_dir;
    ExecMode exec = ExecMode::parallel;
};

/// Registered search targets.
const std::vector<std::string>& search_targets();

/// Hits where the target's hypotheses hold are witnesses; failures of the
/// implication the target cites are violations. Throws Unsupported for an
/// unknown target and BoundExceeded for bounds outside the limits.
SuiteReport search(const SearchSpec& spec);

}  // namespace nests::harness
