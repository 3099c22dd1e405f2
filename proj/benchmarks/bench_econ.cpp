#include <benchmark/benchmark.h>

#include "smkt/dist.hpp"
#include "smkt/econ.hpp"
#include "smkt/synth.hpp"

namespace {

using namespace smkt;

void BM_AdfTest(benchmark::State& state) {
    const auto s = synth::gen_ar1(static_cast<std::size_t>(state.range(0)), 0.5, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(econ::adf_test(s.values, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AdfTest)->Arg(500)->Arg(2000);

void BM_GrangerTest(benchmark::State& state) {
    const auto [x, y] =
        synth::gen_causal_pair(static_cast<std::size_t>(state.range(0)), 0.8, 0.6, 1.0, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(econ::granger_test(x, y, 2));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GrangerTest)->Arg(500)->Arg(2000);

void BM_LjungBox(benchmark::State& state) {
    const auto s = synth::gen_ar1(static_cast<std::size_t>(state.range(0)), 0.0, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(econ::ljung_box(s.values, 10));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LjungBox)->Arg(500)->Arg(2000);

void BM_Ccf(benchmark::State& state) {
    const auto [x, y] =
        synth::gen_causal_pair(static_cast<std::size_t>(state.range(0)), 0.8, 0.6, 1.0, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(econ::ccf(x, y, 10));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ccf)->Arg(500)->Arg(2000);

void BM_FCdf(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dist::f_cdf(x, 4.0, 40.0));
        x = x < 8.0 ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_FCdf);

void BM_Chi2Cdf(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dist::chi2_cdf(x, 10.0));
        x = x < 30.0 ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_Chi2Cdf);

}  // namespace

BENCHMARK_MAIN();
