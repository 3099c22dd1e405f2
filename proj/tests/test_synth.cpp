#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "smkt/errors.hpp"
#include "smkt/ingest.hpp"
#include "smkt/rng.hpp"
#include "smkt/sentiment.hpp"
#include "smkt/synth.hpp"
#include "test_util.hpp"

using namespace smkt;
using testutil::TempDir;
using testutil::read_file;
using testutil::write_file;

TEST_SUITE("synth") {

TEST_CASE("calendars") {
    // 2014-01-02 is a Thursday; the business calendar skips the weekend.
    const auto biz = synth::business_calendar(Date::from_ymd(2014, 1, 2), 4);
    REQUIRE(biz.size() == 4);
    CHECK(biz[0] == Date::from_ymd(2014, 1, 2));
    CHECK(biz[1] == Date::from_ymd(2014, 1, 3));
    CHECK(biz[2] == Date::from_ymd(2014, 1, 6));
    CHECK(biz[3] == Date::from_ymd(2014, 1, 7));

    // A weekend start shifts forward to Monday.
    const auto from_sat = synth::business_calendar(Date::from_ymd(2014, 1, 4), 2);
    CHECK(from_sat[0] == Date::from_ymd(2014, 1, 6));

    const auto long_run = synth::business_calendar(Date::from_ymd(2014, 1, 2), 200);
    for (std::size_t i = 0; i < long_run.size(); ++i) {
        CHECK_FALSE(long_run[i].is_weekend());
        if (i > 0) CHECK(long_run[i - 1] < long_run[i]);
    }

    const auto daily = synth::daily_calendar(Date::from_ymd(2014, 1, 2), 5);
    REQUIRE(daily.size() == 5);
    for (std::size_t i = 0; i < daily.size(); ++i) {
        CHECK(daily[i].serial() == daily[0].serial() + static_cast<std::int32_t>(i));
    }
    CHECK(synth::daily_calendar(Date::from_ymd(2014, 1, 2), 0).empty());
}

TEST_CASE("random walk bars are seeded, valid, and well formed") {
    const auto a = synth::gen_random_walk(60, 0.0002, 0.01, 42);
    const auto b = synth::gen_random_walk(60, 0.0002, 0.01, 42);
    const auto c = synth::gen_random_walk(60, 0.0002, 0.01, 43);
    REQUIRE(a.size() == 60);
    CHECK_NOTHROW(a.validate());

    bool any_diff = false;
    for (std::size_t t = 0; t < 60; ++t) {
        CHECK(a.bars[t].close == b.bars[t].close);
        CHECK(a.bars[t].high == b.bars[t].high);
        CHECK(a.bars[t].volume == b.bars[t].volume);
        any_diff = any_diff || a.bars[t].close != c.bars[t].close;
    }
    CHECK(any_diff);

    const auto cal = synth::business_calendar(synth::kDefaultStart, 60);
    CHECK(a.dates() == cal);

    CHECK(a.bars[0].open == 100.0);
    CHECK(a.bars[0].close == 100.0);
    for (std::size_t t = 0; t < 60; ++t) {
        const auto& bar = a.bars[t];
        if (t > 0) CHECK(bar.open == a.bars[t - 1].close);
        CHECK(bar.adj_close == bar.close);
        CHECK(bar.high >= std::max(bar.open, bar.close));
        CHECK(bar.low <= std::min(bar.open, bar.close));
        CHECK(bar.volume == std::floor(bar.volume));
        CHECK(bar.volume >= 500000.0);
        CHECK(bar.volume < 1500000.0);
    }

    CHECK_THROWS_AS(synth::gen_random_walk(0, 0.0, 0.01, 1), Error);
    CHECK_THROWS_AS(synth::gen_random_walk(10, 0.0, 0.01, 1, synth::kDefaultStart, 0.0),
                    Error);
}

TEST_CASE("zero volatility gives the pure drift path") {
    const double drift = 0.001;
    const auto s = synth::gen_random_walk(30, drift, 0.0, 7);
    double expected = 100.0;
    CHECK(s.bars[0].close == expected);
    for (std::size_t t = 1; t < 30; ++t) {
        expected *= std::exp(drift);
        CHECK(s.bars[t].close == expected);  // exact: same operation sequence
        // pad = 0.5 * |vol| + 0.002 bounds the intrabar range
        const double hi_cap = std::max(s.bars[t].open, s.bars[t].close) * 1.002;
        const double lo_cap = std::min(s.bars[t].open, s.bars[t].close) * 0.998;
        CHECK(s.bars[t].high <= hi_cap);
        CHECK(s.bars[t].low >= lo_cap);
    }
}

TEST_CASE("trend regime alternates drift in bounded runs") {
    const std::size_t kMin = 3;
    const std::size_t kMax = 5;
    const auto s = synth::gen_trend_regime(40, 11, 0.006, 0.0, kMin, kMax);
    REQUIRE(s.size() == 40);
    CHECK_NOTHROW(s.validate());

    // With zero noise every log return is exactly +/- drift_mag.
    std::vector<int> signs;
    for (std::size_t t = 1; t < 40; ++t) {
        const double r = std::log(s.bars[t].close / s.bars[t - 1].close);
        CHECK(std::fabs(std::fabs(r) - 0.006) < 1e-12);
        signs.push_back(r > 0 ? 1 : -1);
    }

    // Complete runs last between regime_min and regime_max bars; only the
    // final (truncated) run may be shorter than regime_min.
    std::vector<std::size_t> runs;
    std::size_t len = 1;
    for (std::size_t i = 1; i < signs.size(); ++i) {
        if (signs[i] == signs[i - 1]) {
            ++len;
        } else {
            runs.push_back(len);
            len = 1;
        }
    }
    runs.push_back(len);
    REQUIRE(runs.size() >= 2);
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        CHECK(runs[i] >= kMin);
        CHECK(runs[i] <= kMax);
    }
    CHECK(runs.back() <= kMax);

    // Determinism.
    const auto again = synth::gen_trend_regime(40, 11, 0.006, 0.0, kMin, kMax);
    for (std::size_t t = 0; t < 40; ++t) CHECK(again.bars[t].close == s.bars[t].close);

    CHECK_THROWS_AS(synth::gen_trend_regime(10, 1, 0.006, 0.002, 0, 5), Error);
    CHECK_THROWS_AS(synth::gen_trend_regime(10, 1, 0.006, 0.002, 6, 5), Error);
    CHECK_THROWS_AS(synth::gen_trend_regime(0, 1), Error);
}

TEST_CASE("ar1 follows the seeded recursion after burn-in") {
    const auto s = synth::gen_ar1(25, 0.5, 13, 2.0);
    REQUIRE(s.size() == 25);
    CHECK(s.dates == synth::business_calendar(synth::kDefaultStart, 25));
    CHECK_NOTHROW(s.validate());

    // Mirror the construction: 50 burn-in draws from stream 0, then record.
    Rng rng(13, 0);
    double x = 0.0;
    for (int burn = 0; burn < 50; ++burn) x = 0.5 * x + 2.0 * rng.next_normal();
    for (std::size_t t = 0; t < 25; ++t) {
        x = 0.5 * x + 2.0 * rng.next_normal();
        CHECK(s.values[t] == x);
    }

    // phi = 1 accumulates the same draws as a pure random walk.
    const auto walk = synth::gen_ar1(10, 1.0, 99);
    Rng walk_rng(99, 0);
    double level = 0.0;
    for (int burn = 0; burn < 50; ++burn) level += walk_rng.next_normal();
    for (std::size_t t = 0; t < 10; ++t) {
        level += walk_rng.next_normal();
        CHECK(walk.values[t] == level);
    }

    CHECK_THROWS_AS(synth::gen_ar1(0, 0.5, 1), Error);
}

TEST_CASE("causal pair feeds x into y with one lag") {
    const auto [x, y] = synth::gen_causal_pair(100, 0.7, 0.4, 1.0, 3);
    REQUIRE(x.size() == 100);
    REQUIRE(y.size() == 100);
    CHECK(x.dates == y.dates);
    CHECK_NOTHROW(x.validate());
    CHECK_NOTHROW(y.validate());

    // Frozen leading values pin the generator output across platforms.
    CHECK(x.values[0] == doctest::Approx(-0.26756643473306013).epsilon(1e-15));
    CHECK(x.values[1] == doctest::Approx(0.20244949381344399).epsilon(1e-15));

    // Mirror the recursion with independent per-series streams.
    Rng rng_x(3, 0);
    Rng rng_y(3, 1);
    double mx = 0.0;
    double my = 0.0;
    const auto step = [&] {
        const double x_prev = mx;
        mx = 0.7 * x_prev + rng_x.next_normal();
        my = 0.7 * my + 0.4 * x_prev + rng_y.next_normal();
    };
    for (int burn = 0; burn < 50; ++burn) step();
    for (std::size_t t = 0; t < 100; ++t) {
        step();
        CHECK(x.values[t] == mx);
        CHECK(y.values[t] == my);
    }

    // The x stream is independent of the cross coefficient.
    const auto none = synth::gen_causal_pair(100, 0.7, 0.0, 1.0, 3);
    CHECK(none.first.values == x.values);
    CHECK(none.second.values != y.values);

    CHECK_THROWS_AS(synth::gen_causal_pair(0, 0.7, 0.4, 1.0, 1), Error);
}

TEST_CASE("fixture lexicons are well formed and interference-free") {
    const auto att = synth::fixture_attitude_lexicon();
    const auto emo = synth::fixture_emotion_lexicon();

    REQUIRE(att.entries.size() == 8);
    CHECK(att.entries.at("bullish") == 0.8);
    CHECK(att.entries.at("bearish") == -0.8);
    CHECK(att.negators == std::set<std::string>{"never", "no", "not", "without"});

    // One single-label token per emotion dimension, in canonical order.
    const char* generated[8] = {"furious", "hopeful", "vile",   "panic",
                                "cheer",   "sorrow",  "sudden", "reliable"};
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(emo.entries.at(generated[k]) == (1u << k));
    }
    CHECK(emo.entries.at("turmoil") ==
          ((1u << ingest::emotion_index("fear")) | (1u << ingest::emotion_index("sadness"))));
    CHECK(emo.entries.at("windfall") ==
          ((1u << ingest::emotion_index("joy")) | (1u << ingest::emotion_index("surprise"))));

    // No token doubles as a tense cue or attitude/emotion crossover.
    for (const auto& [token, score] : att.entries) {
        CHECK(sentiment::tag_temporal(std::vector<std::string>{token}) ==
              sentiment::TemporalTag::unknown);
        CHECK(emo.entries.count(token) == 0);
    }
    for (const auto& [token, mask] : emo.entries) {
        CHECK(sentiment::tag_temporal(std::vector<std::string>{token}) ==
              sentiment::TemporalTag::unknown);
        CHECK(att.entries.count(token) == 0);
    }

    // The TSV files round trip into the same lexicons.
    TempDir tmp;
    const std::string att_path = tmp.file("attitude.tsv");
    const std::string emo_path = tmp.file("emotion.tsv");
    synth::save_fixture_lexicons(att_path, emo_path);
    const auto att_loaded = ingest::load_attitude_lexicon(att_path);
    const auto emo_loaded = ingest::load_emotion_lexicon(emo_path);
    CHECK(att_loaded.entries == att.entries);
    CHECK(att_loaded.negators == att.negators);
    CHECK(att_loaded.duplicate_count == 0);
    CHECK(emo_loaded.entries == emo.entries);
}

TEST_CASE("signal targets stay inside their documented ranges") {
    const auto calendar = synth::daily_calendar(Date::from_ymd(2014, 1, 1), 200);
    const auto plan = synth::gen_signal_targets(calendar, 17, 0.2);
    REQUIRE(plan.signals.size() == 200);

    std::size_t zero_attitude = 0;
    std::size_t zero_emotion = 0;
    for (std::size_t i = 0; i < plan.signals.size(); ++i) {
        const auto& s = plan.signals[i];
        CHECK(s.date == calendar[i]);
        CHECK(s.doc_count >= 1);
        CHECK(s.doc_count <= 4);
        CHECK(s.attitude >= -0.6);
        CHECK(s.attitude <= 0.6);
        double total = 0.0;
        for (double e : s.emotions) {
            CHECK(e >= 0.0);
            total += e;
        }
        CHECK(total <= 0.45 + 1e-12);
        if (s.attitude == 0.0) ++zero_attitude;
        if (total == 0.0) ++zero_emotion;
    }
    CHECK(zero_attitude > 0);
    CHECK(zero_emotion > 0);

    // Past days are a subset of the calendar in calendar order, at roughly
    // the requested rate.
    CHECK(plan.past_days.size() >= 20);
    CHECK(plan.past_days.size() <= 60);
    for (std::size_t i = 0; i < plan.past_days.size(); ++i) {
        CHECK(std::binary_search(calendar.begin(), calendar.end(), plan.past_days[i]));
        if (i > 0) CHECK(plan.past_days[i - 1] < plan.past_days[i]);
    }

    CHECK(synth::gen_signal_targets(calendar, 17, 0.0).past_days.empty());
    CHECK(synth::gen_signal_targets(calendar, 17, 1.0).past_days.size() == 200);

    // Determinism.
    const auto again = synth::gen_signal_targets(calendar, 17, 0.2);
    for (std::size_t i = 0; i < 200; ++i) {
        CHECK(again.signals[i].attitude == plan.signals[i].attitude);
        CHECK(again.signals[i].emotions == plan.signals[i].emotions);
        CHECK(again.signals[i].doc_count == plan.signals[i].doc_count);
    }

    CHECK_THROWS_AS(synth::gen_signal_targets(calendar, 1, -0.1), Error);
    CHECK_THROWS_AS(synth::gen_signal_targets(calendar, 1, 1.1), Error);
}

TEST_CASE("corpus generation plants recoverable signals") {
    const auto calendar = synth::daily_calendar(Date::from_ymd(2014, 1, 2), 30);
    const auto plan = synth::gen_signal_targets(calendar, 7, 0.25);
    const auto docs = synth::gen_corpus(calendar, plan.signals, plan.past_days, 7, "test");

    std::size_t expected_docs = 0;
    for (const auto& s : plan.signals) expected_docs += s.doc_count;
    REQUIRE(docs.size() == expected_docs);

    for (const auto& doc : docs) {
        CHECK(doc.source == "synth");
        CHECK(doc.tags == std::vector<std::string>{"TEST"});
        const auto sentences = sentiment::split_sentences(doc.text);
        CHECK(sentences.size() == 3);
        for (const auto& sentence : sentences) {
            CHECK(sentiment::tokenize(sentence).size() == 25);
        }
    }

    const auto att = synth::fixture_attitude_lexicon();
    const auto emo = synth::fixture_emotion_lexicon();

    // Standard extraction recovers the planted targets closely.
    const auto standard = sentiment::aggregate_daily(
        sentiment::analyze_corpus(docs, att, emo, sentiment::Mode::standard), calendar);
    REQUIRE(standard.size() == 30);
    for (std::size_t i = 0; i < 30; ++i) {
        CHECK(standard[i].doc_count == plan.signals[i].doc_count);
        CHECK(std::fabs(standard[i].attitude - plan.signals[i].attitude) < 0.05);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::fabs(standard[i].emotions[k] - plan.signals[i].emotions[k]) < 0.05);
        }
    }

    // Temporal extraction zeroes exactly the past-tagged days and leaves the
    // others bit-identical.
    const auto temporal = sentiment::aggregate_daily(
        sentiment::analyze_corpus(docs, att, emo, sentiment::Mode::temporal), calendar);
    REQUIRE(plan.past_days.size() > 0);
    for (std::size_t i = 0; i < 30; ++i) {
        const bool is_past = std::binary_search(plan.past_days.begin(), plan.past_days.end(),
                                                calendar[i]);
        CHECK(temporal[i].doc_count == plan.signals[i].doc_count);
        if (is_past) {
            CHECK(temporal[i].attitude == 0.0);
            for (double e : temporal[i].emotions) CHECK(e == 0.0);
        } else {
            CHECK(temporal[i].attitude == standard[i].attitude);
            CHECK(temporal[i].emotions == standard[i].emotions);
        }
    }

    // Every sentence of a past day's documents carries the past cue.
    const Date past_day = plan.past_days.front();
    bool saw_past_doc = false;
    for (const auto& doc : docs) {
        if (doc.date != past_day) continue;
        saw_past_doc = true;
        for (const auto& sentence : sentiment::split_sentences(doc.text)) {
            CHECK(sentiment::tag_temporal(sentence) == sentiment::TemporalTag::past);
        }
    }
    CHECK(saw_past_doc);

    // A day's documents depend only on its own date and target.
    const Date probe = calendar[5];
    const std::vector<Date> sub_calendar = {probe};
    const auto sub_docs = synth::gen_corpus(sub_calendar, plan.signals, plan.past_days, 7,
                                            "test");
    std::vector<std::string> full_texts;
    for (const auto& doc : docs) {
        if (doc.date == probe) full_texts.push_back(doc.text);
    }
    REQUIRE(sub_docs.size() == full_texts.size());
    for (std::size_t i = 0; i < sub_docs.size(); ++i) {
        CHECK(sub_docs[i].text == full_texts[i]);
    }

    // Determinism of the full corpus.
    const auto again = synth::gen_corpus(calendar, plan.signals, plan.past_days, 7, "test");
    REQUIRE(again.size() == docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) CHECK(again[i].text == docs[i].text);
}

TEST_CASE("corpus generation rejects unreachable targets") {
    const std::vector<Date> calendar = {Date::from_ymd(2014, 1, 2)};

    sentiment::DailySignal target;
    target.date = calendar[0];
    target.doc_count = 1;

    // Attitude beyond the strongest token mix.
    target.attitude = 0.9;
    CHECK_THROWS_AS(synth::gen_corpus(calendar, {target}, {}, 1), Error);

    // Emotion frequency outside [0, 1].
    target.attitude = 0.0;
    target.emotions[0] = 1.2;
    CHECK_THROWS_AS(synth::gen_corpus(calendar, {target}, {}, 1), Error);

    // A full-budget emotion load leaves no room for the attitude tokens.
    target.emotions[0] = 1.0;
    target.attitude = 0.8;
    CHECK_THROWS_AS(synth::gen_corpus(calendar, {target}, {}, 1), Error);

    // Unsorted calendars are rejected.
    const std::vector<Date> bad = {Date::from_ymd(2014, 1, 3), Date::from_ymd(2014, 1, 2)};
    CHECK_THROWS_AS(synth::gen_corpus(bad, {}, {}, 1), Error);

    // Days without a planted signal, or with zero documents, emit nothing.
    CHECK(synth::gen_corpus(calendar, {}, {}, 1).empty());
    target.attitude = 0.0;
    target.emotions[0] = 0.0;
    target.doc_count = 0;
    CHECK(synth::gen_corpus(calendar, {target}, {}, 1).empty());
}

}  // TEST_SUITE
