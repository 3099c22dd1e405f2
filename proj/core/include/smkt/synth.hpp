#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smkt/dates.hpp"
#include "smkt/ingest.hpp"
#include "smkt/sentiment.hpp"
#include "smkt/series.hpp"

namespace smkt::synth {

/// Every generator here is a pure function of its parameters and seed; the
/// shared Rng makes the fixtures bit-identical across platforms.

inline const Date kDefaultStart = Date::from_ymd(2014, 1, 2);

/// n consecutive weekdays starting at `start` (shifted off a weekend).
std::vector<Date> business_calendar(Date start, std::size_t n);

/// n consecutive calendar days starting at `start`.
std::vector<Date> daily_calendar(Date start, std::size_t n);

/// Geometric random walk: close_t = close_{t-1} * exp(drift + vol * z_t),
/// close_0 = start_price, on a business-day calendar. Open is the previous
/// close; high/low pad the open/close range by a bounded intrabar factor.
/// vol = 0 gives the deterministic exponential drift path.
ingest::PriceSeries gen_random_walk(std::size_t n, double drift, double vol,
                                    std::uint64_t seed, Date start = kDefaultStart,
                                    double start_price = 100.0);

/// Regime-switching drift path: the log-return drift flips between
/// +drift_mag and -drift_mag at seeded intervals of regime_min..regime_max
/// bars, with per-bar noise `vol`. With drift dominating noise, the n-day
/// forward sign is predictable from recent momentum, which makes this the
/// substrate for end-to-end classifier checks.
ingest::PriceSeries gen_trend_regime(std::size_t n, std::uint64_t seed,
                                     double drift_mag = 0.006, double vol = 0.002,
                                     std::size_t regime_min = 30,
                                     std::size_t regime_max = 60,
                                     Date start = kDefaultStart,
                                     double start_price = 100.0);

/// AR(1): x_t = phi * x_{t-1} + sigma * z_t, recorded after a 50-step
/// burn-in from x = 0. phi = 1 yields a pure random walk.
DatedSeries gen_ar1(std::size_t n, double phi, std::uint64_t seed, double sigma = 1.0,
                    Date start = kDefaultStart);

/// A pair with known causal direction:
///   x_t = a_self * x_{t-1} + e_x,   y_t = a_self * y_{t-1} + b_cross * x_{t-1} + e_y
/// where e ~ N(0, noise^2), after a 50-step burn-in. b_cross = 0 plants no
/// causality.
std::pair<DatedSeries, DatedSeries> gen_causal_pair(std::size_t n, double a_self,
                                                    double b_cross, double noise,
                                                    std::uint64_t seed,
                                                    Date start = kDefaultStart);

/// The small lexicons every synthetic corpus is built against. Attitude and
/// emotion tokens are disjoint, carry no tense cues, and each generator
/// emotion token maps to exactly one emotion, so planted signals are
/// recoverable.
ingest::AttitudeLexicon fixture_attitude_lexicon();
ingest::EmotionLexicon fixture_emotion_lexicon();

/// Writes the fixture lexicons in their TSV interchange formats.
void save_fixture_lexicons(const std::string& attitude_path,
                           const std::string& emotion_path);

/// A per-day target signal plus the set of days whose documents should be
/// written entirely in past tense.
struct SignalPlan {
    std::vector<sentiment::DailySignal> signals;
    std::vector<Date> past_days;
};

/// Draws plausible daily targets: attitude in [-0.6, 0.6] (sometimes exactly
/// 0), emotion frequencies summing to at most 0.45 (sometimes all zero),
/// 1..4 documents per day, and a seeded past_fraction of past-tense days.
SignalPlan gen_signal_targets(const std::vector<Date>& calendar, std::uint64_t seed,
                              double past_fraction = 0.2);

/// Inverse problem: documents whose extraction against the fixture lexicons
/// approximately recovers the planted per-day targets. Each planted day
/// emits signal.doc_count documents of 3 sentences x 25 tokens; attitude is
/// planted through +/-0.8 token mixes dithered across sentences, emotions
/// through exact token counts, and days listed in past_days carry a past
/// cue in every sentence. Non-empty `ticker` tags every document.
std::vector<ingest::Document> gen_corpus(const std::vector<Date>& calendar,
                                         const std::vector<sentiment::DailySignal>& planted,
                                         const std::vector<Date>& past_days,
                                         std::uint64_t seed,
                                         const std::string& ticker = "");

}  // namespace smkt::synth
