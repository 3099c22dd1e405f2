#include <benchmark/benchmark.h>

#include <vector>

#include "smkt/sentiment.hpp"
#include "smkt/synth.hpp"

namespace {

using namespace smkt;

void BM_AnalyzeCorpus(benchmark::State& state) {
    const auto calendar =
        synth::daily_calendar(synth::kDefaultStart, static_cast<std::size_t>(state.range(0)));
    const auto plan = synth::gen_signal_targets(calendar, 7);
    const auto docs = synth::gen_corpus(calendar, plan.signals, plan.past_days, 7, "acme");
    const auto attitude = synth::fixture_attitude_lexicon();
    const auto emotion = synth::fixture_emotion_lexicon();
    for (auto _ : state) {
        const auto scored =
            sentiment::analyze_corpus(docs, attitude, emotion, sentiment::Mode::temporal);
        benchmark::DoNotOptimize(sentiment::aggregate_daily(scored, calendar));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_AnalyzeCorpus)->Arg(100)->Arg(400);

}  // namespace
