#include "icol/constructions.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_HypercubeTower(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::build_hypercube_tower(n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HypercubeTower)->DenseRange(4, 14, 2);

void BM_CompleteTower(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const icol::ColoredGraph k2{icol::complete_graph(2), icol::EdgeColoring(1, {1})};
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::build_complete_tower(n, k2));
}
BENCHMARK(BM_CompleteTower)->RangeMultiplier(2)->Range(2, 128);

void BM_VerifyInterval(benchmark::State &state)
{
    auto q = icol::build_hypercube_tower(static_cast<unsigned>(state.range(0))).result;
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::verify_interval(q.graph, q.coloring));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q.graph.edge_count()));
}
BENCHMARK(BM_VerifyInterval)->Arg(8)->Arg(12)->Arg(16);

void BM_DownshiftChain(benchmark::State &state)
{
    auto q = icol::build_hypercube_tower(static_cast<unsigned>(state.range(0))).result;
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::spectrum_colorings(q.graph, q.coloring));
}
BENCHMARK(BM_DownshiftChain)->Arg(6)->Arg(8);

} // namespace
