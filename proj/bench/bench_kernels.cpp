// Serial reference kernels against their OpenMP versions.

#include <burn/generators.hpp>
#include <burn/graph.hpp>
#include <burn/solver.hpp>

#include <benchmark/benchmark.h>

namespace {

burn::Graph bench_graph(std::int64_t n)
{
    return burn::gen::random_connected(static_cast<std::size_t>(n), 1.5 / static_cast<double>(n), 42);
}

void BM_DistancesSerial(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::all_pairs_distances_serial(g));
}

void BM_DistancesParallel(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::all_pairs_distances(g));
}

// Decision at k = b - 1 is the expensive, infeasible case.
void BM_DecideSerial(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    auto dm = burn::all_pairs_distances(g);
    auto k = burn::burning_number(g, dm).burning_number - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::decide_serial(g, dm, k));
}

void BM_DecideParallel(benchmark::State & state)
{
    auto g = bench_graph(state.range(0));
    auto dm = burn::all_pairs_distances(g);
    auto k = burn::burning_number(g, dm).burning_number - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::decide(g, dm, k));
}

} // namespace

BENCHMARK(BM_DistancesSerial)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_DistancesParallel)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_DecideSerial)->Arg(60)->Arg(90)->Arg(120);
BENCHMARK(BM_DecideParallel)->Arg(60)->Arg(90)->Arg(120);

BENCHMARK_MAIN();
