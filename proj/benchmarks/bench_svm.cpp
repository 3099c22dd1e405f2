#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "smkt/rng.hpp"
#include "smkt/svm.hpp"

namespace {

using namespace smkt;

void make_clusters(std::uint64_t seed, std::size_t per_class,
                   std::vector<std::vector<double>>& features, std::vector<int>& labels) {
    Rng rng(seed);
    for (std::size_t i = 0; i < per_class; ++i) {
        features.push_back({1.5 + rng.next_normal(), 1.5 + rng.next_normal()});
        labels.push_back(1);
        features.push_back({-1.5 + rng.next_normal(), -1.5 + rng.next_normal()});
        labels.push_back(-1);
    }
}

void BM_SvmTrain(benchmark::State& state) {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    make_clusters(101, static_cast<std::size_t>(state.range(0)) / 2, x, y);
    svm::SvmConfig cfg;
    cfg.C = 10.0;
    cfg.gamma = 0.3;
    cfg.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(svm::train(x, y, cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SvmTrain)->Arg(100)->Arg(400);

void BM_SvmPredict(benchmark::State& state) {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    make_clusters(101, 200, x, y);
    svm::SvmConfig cfg;
    cfg.C = 10.0;
    cfg.gamma = 0.3;
    cfg.seed = 7;
    const auto model = svm::train(x, y, cfg);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(svm::predict(model, x[i]));
        i = (i + 1) % x.size();
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SvmPredict);

void BM_GridSearch(benchmark::State& state) {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    make_clusters(101, 75, x, y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            svm::grid_search(x, y, {1.0, 10.0}, {0.1, 0.3}, 3, 7));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_GridSearch);

}  // namespace
