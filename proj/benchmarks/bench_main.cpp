#include <benchmark/benchmark.h>

#include "backlimit/backward.hpp"
#include "backlimit/birkhoff.hpp"
#include "backlimit/fixtures.hpp"
#include "backlimit/limit_sets.hpp"
#include "backlimit/pl_map.hpp"

using namespace backlimit;

namespace {

const PLMap& tent() {
    static const PLMap f = fixture("tent").map;
    return f;
}

const PLMap& fig1() {
    static const PLMap f = fixture("fig1").map;
    return f;
}

void BM_EvalIter(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_iter(fig1(), Rat(1, 7), n));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalIter)->Arg(64)->Arg(1024);

// level sets double in size for the tent map
void BM_PreimageSets(benchmark::State& state) {
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(preimage_sets(tent(), Rat(1, 21), depth, 1u << 20));
}
BENCHMARK(BM_PreimageSets)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_IterateMap(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(iterate_map(tent(), p, 1u << 12));
}
BENCHMARK(BM_IterateMap)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_AlphaApprox(benchmark::State& state) {
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(alpha_approx(tent(), Rat(1, 21), depth, depth / 2, 2, Rat(1, 32), 1u << 20));
    }
}
BENCHMARK(BM_AlphaApprox)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExcursionScan(benchmark::State& state) {
    const Neighborhood u{IntervalUnion::parse("(-1/100,1/100) (49/100,203/300) (99/100,101/100)"), Target::custom};
    const auto seeds = grid_points(Interval::closed(0, 1), Rat(1, 16));
    ExcursionParams p;
    p.samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(excursion_scan(fig1(), u, seeds, p));
}
BENCHMARK(BM_ExcursionScan)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
