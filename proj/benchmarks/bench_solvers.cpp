#include <benchmark/benchmark.h>

#include "alphadom/community.hpp"
#include "alphadom/generators.hpp"
#include "alphadom/greedy.hpp"
#include "alphadom/lp.hpp"
#include "alphadom/rounding.hpp"

using namespace alphadom;

namespace {

WeightedGraph er_graph(std::size_t n) { return assign_weights(gen_gnm(n, n * 10, 1), {1, 71}, 1); }

void BM_GreedyS3(benchmark::State& state) {
    const DominationInstance inst(er_graph(static_cast<std::size_t>(state.range(0))), Alpha(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_dominate(inst, Strategy::ByNeighborhoodShare).total_weight());
}
BENCHMARK(BM_GreedyS3)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_LpSolve(benchmark::State& state) {
    const DominationInstance inst(er_graph(static_cast<std::size_t>(state.range(0))), Alpha(1, 2));
    const auto lp = build_lp(inst);
    for (auto _ : state) benchmark::DoNotOptimize(solve(lp).objective_value);
}
BENCHMARK(BM_LpSolve)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
    const auto g = gen_planted_partition(5, static_cast<std::size_t>(state.range(0)), 0.2, 0.001, 3).graph;
    for (auto _ : state) benchmark::DoNotOptimize(louvain(g).num_communities());
}
BENCHMARK(BM_Louvain)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AlgRR(benchmark::State& state) {
    const DominationInstance inst(er_graph(static_cast<std::size_t>(state.range(0))), Alpha(1, 2));
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(alg_rr(inst, RoundingConfig{0.5, std::nullopt, seed++}).size());
}
BENCHMARK(BM_AlgRR)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AlgRRWC(benchmark::State& state) {
    const DominationInstance inst(er_graph(static_cast<std::size_t>(state.range(0))), Alpha(1, 2));
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(alg_rrwc(inst, RoundingConfig{0.5, std::nullopt, seed++}).size());
}
BENCHMARK(BM_AlgRRWC)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
