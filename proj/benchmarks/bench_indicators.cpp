#include <benchmark/benchmark.h>

#include "smkt/indicators.hpp"
#include "smkt/synth.hpp"

namespace {

using namespace smkt;

void BM_IndicatorMatrix(benchmark::State& state) {
    const auto prices =
        synth::gen_random_walk(static_cast<std::size_t>(state.range(0)), 0.0003, 0.012, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(indicators::build_indicator_matrix(prices));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IndicatorMatrix)->Arg(500)->Arg(2000)->Arg(8000);

}  // namespace
