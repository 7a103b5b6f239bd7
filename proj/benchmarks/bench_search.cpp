#include "icol/search.hpp"

#include <benchmark/benchmark.h>

namespace {

// feasible and infeasible queries the oracle answers in well under a second
void BM_SearchK6(benchmark::State &state)
{
    const auto g = icol::complete_graph(6);
    const auto t = static_cast<icol::Color>(state.range(0));
    for (auto _ : state) {
        auto r = icol::find_interval_coloring(g, t, icol::SearchBudget{});
        state.counters["nodes"] = static_cast<double>(r.nodes);
    }
}
BENCHMARK(BM_SearchK6)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_ExactWQ3(benchmark::State &state)
{
    const auto g = icol::hypercube_graph(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::exact_W(g, icol::SearchBudget{}));
}
BENCHMARK(BM_ExactWQ3)->Unit(benchmark::kMillisecond);

void BM_SymmetryBreaking(benchmark::State &state)
{
    const auto g = icol::complete_graph(4);
    const icol::SearchOptions options{state.range(0) != 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(icol::find_interval_coloring(g, 5, icol::SearchBudget{}, options));
}
BENCHMARK(BM_SymmetryBreaking)->Arg(0)->Arg(1);

} // namespace
