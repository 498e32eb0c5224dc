#include <benchmark/benchmark.h>

#include <numbers>

#include "hypervol/mc_oracle.hpp"

using namespace hypervol;

namespace {

const mc::Region& region_for(int which) {
    static const mc::Region ball = mc::region_ball(1.0);
    static const mc::Region cone = mc::region_cone(1.0, std::numbers::pi / 4);
    static const mc::Region barrel = mc::region_barrel(1.0, 1.0);
    return which == 0 ? ball : which == 1 ? cone : barrel;
}

void BM_serial(benchmark::State& state) {
    const mc::Region& r = region_for(static_cast<int>(state.range(0)));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mc::estimate_serial(r, n, 1).mean);
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_parallel(benchmark::State& state) {
    const mc::Region& r = region_for(static_cast<int>(state.range(0)));
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mc::estimate(r, n, 1).mean);
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

// region: 0 ball, 1 cone, 2 barrel
BENCHMARK(BM_serial)->ArgsProduct({{0, 1, 2}, {100'000}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2}, {100'000}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
