// Parallel kernels against the serial reference on PowerSetOf(M) blow-ups.
// Argument: |M|.

#include <benchmark/benchmark.h>

#include "zdg/blowup.hpp"

namespace {

zdg::Graph blowup(int m) {
    zdg::SpaceModel model(zdg::GroundSet::finite(static_cast<std::uint64_t>(m) + 1),
                          zdg::PowerSetOf{zdg::PeriodicSet::range(0, static_cast<zdg::Point>(m))});
    zdg::BlowupSpec spec{model, zdg::GraphFlavor::CP, zdg::PeriodicSet::range(0, static_cast<zdg::Point>(m))};
    spec.cap = 1000;
    return zdg::generate(spec).graph;
}

void BM_distances_parallel(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::all_pairs_distances(g));
}

void BM_distances_serial(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::serial::all_pairs_distances(g));
}

void BM_cycles_parallel(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::all_pairs_cycle_through(g));
}

void BM_cycles_serial(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::serial::all_pairs_cycle_through(g));
}

void BM_chordless_parallel(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::chordless_cycle_lengths(g));
}

void BM_chordless_serial(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::serial::chordless_cycle_lengths(g));
}

void BM_five_cycles_parallel(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::far_five_cycle_vertices(g));
}

void BM_five_cycles_serial(benchmark::State& state) {
    auto g = blowup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zdg::serial::far_five_cycle_vertices(g));
}

}  // namespace

BENCHMARK(BM_distances_parallel)->DenseRange(3, 5);
BENCHMARK(BM_distances_serial)->DenseRange(3, 5);
BENCHMARK(BM_cycles_parallel)->DenseRange(3, 4);
BENCHMARK(BM_cycles_serial)->DenseRange(3, 4);
BENCHMARK(BM_chordless_parallel)->DenseRange(3, 4);
BENCHMARK(BM_chordless_serial)->DenseRange(3, 4);
BENCHMARK(BM_five_cycles_parallel)->DenseRange(3, 5);
BENCHMARK(BM_five_cycles_serial)->DenseRange(3, 5);

BENCHMARK_MAIN();
