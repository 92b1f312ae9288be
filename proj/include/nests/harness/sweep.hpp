#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nests/harness/report.hpp"

namespace nests::harness {

enum class ExecMode { serial, parallel };

/// Name of the environment variable that caps the worker count.
inline constexpr const char* kWorkersEnv = "NESTS_WORKERS";

/// NESTS_WORKERS when set to a positive integer, else the OpenMP default.
int worker_count();

/// Runs body(i, collector) for i in [0, count) and returns the merged,
/// finalized collector. The parallel path gives each worker its own
/// collector; the result is identical to the serial path.
template <class Body>
Collector sweep(std::uint64_t count, ExecMode mode, Body&& body) {
    Collector merged;
    if (mode == ExecMode::serial || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) body(i, merged);
        merged.finalize();
        return merged;
    }
#ifdef _OPENMP
    const int workers = worker_count();
    std::vector<Collector> parts(static_cast<std::size_t>(workers));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(workers)
    {
        Collector& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                body(static_cast<std::uint64_t>(i), mine);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (Collector& c : parts) merged.merge(std::move(c));
#else
    for (std::uint64_t i = 0; i < count; ++i) body(i, merged);
#endif
    merged.finalize();
    return merged;
}

}  // namespace nests::harness
