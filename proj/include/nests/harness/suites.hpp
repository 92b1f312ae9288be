#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nests/harness/report.hpp"
#include "nests/harness/sweep.hpp"

namespace nests::harness {

/// Largest universe enumerated exhaustively.
inline constexpr int kMaxExhaustiveN = 4;
/// Largest universe sampled by random sweeps.
inline constexpr int kMaxRandomN = 6;

struct SuiteConfig {
    int max_n = kMaxExhaustiveN;       ///< exhaustive universe bound
    std::uint64_t seed = 1;
    std::uint64_t iters = 10000;       ///< random instances per randomized block
    int random_max_n = kMaxRandomN;    ///< random universe bound
    ExecMode mode = ExecMode::parallel;
    bool timing = false;               ///< record wall time (breaks byte-identity)
};

/// Registered suite names.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws Unsupported for an unknown name and BoundExceeded
/// when the configured bounds leave the documented limits.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace nests::harness
