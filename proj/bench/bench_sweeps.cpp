// Serial reference against the OpenMP sweep on the same suites.
// Worker count comes from NESTS_WORKERS (default: OpenMP's maximum).

#include <benchmark/benchmark.h>

#include "nests/harness/suites.hpp"
#include "nests/harness/sweep.hpp"
#include "nests/nest_analysis.hpp"

using namespace nests;
using namespace nests::harness;

namespace {

void run(benchmark::State& state, const char* suite, ExecMode mode) {
    SuiteConfig cfg;
    cfg.max_n = static_cast<int>(state.range(0));
    cfg.iters = 2000;
    cfg.mode = mode;
    for (auto _ : state) {
        SuiteReport r = run_suite(suite, cfg);
        benchmark::DoNotOptimize(r.instances);
    }
    state.counters["workers"] = mode == ExecMode::serial ? 1 : worker_count();
}

void BM_Interlocking(benchmark::State& s, ExecMode m) { run(s, "interlocking-triple", m); }
void BM_Conditions(benchmark::State& s, ExecMode m) { run(s, "nest-conditions", m); }
void BM_Bounds(benchmark::State& s, ExecMode m) { run(s, "bounds", m); }

// Bare kernel: the three condition checks over every nest on |X| = n.
void BM_ConditionKernel(benchmark::State& state, ExecMode mode) {
    NestEnumeration opts;
    opts.bound = kMaxEnumerationBound;
    const std::vector<Nest> nests = enumerate_nests(Universe(static_cast<int>(state.range(0))), opts);
    for (auto _ : state) {
        Collector c = sweep(nests.size(), mode, [&](std::uint64_t i, Collector& col) {
            const Conditions k = check_conditions(nests[i]);
            col.check("c3-implies-c2", k.c3, k.c2, [] { return json(); });
        });
        benchmark::DoNotOptimize(c.instances());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * nests.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Interlocking, serial, ExecMode::serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Interlocking, parallel, ExecMode::parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Conditions, serial, ExecMode::serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Conditions, parallel, ExecMode::parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bounds, serial, ExecMode::serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bounds, parallel, ExecMode::parallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConditionKernel, serial, ExecMode::serial)->Arg(4)->Arg(5);
BENCHMARK_CAPTURE(BM_ConditionKernel, parallel, ExecMode::parallel)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
