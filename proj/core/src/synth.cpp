#include "smkt/synth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"
#include "smkt/rng.hpp"

namespace smkt::synth {
namespace {

/// Rng stream indices, fixed so adding a stream never shifts another.
enum Stream : std::uint64_t {
    kReturns = 0,
    kIntrabar = 1,
    kVolume = 2,
    kRegime = 3,
};

struct AttitudeEntry {
    const char* token;
    double score;
};

/// None of these tokens end in "ed", none is a tense cue, and the set is
/// disjoint from the emotion tokens and fillers below — properties the
/// planted-signal round trip depends on (and that tests assert).
constexpr AttitudeEntry kAttitudeEntries[] = {
    {"bullish", 0.8}, {"upbeat", 0.6}, {"gain", 0.5},  {"strong", 0.4},
    {"weak", -0.4},   {"loss", -0.5},  {"grim", -0.6}, {"bearish", -0.8},
};

constexpr const char* kNegators[] = {"not", "no", "never", "without"};

/// The generator plants emotions through these single-label tokens, one per
/// dimension of ingest::kEmotions, in that order.
constexpr const char* kGenEmotionTokens[8] = {
    "furious", "hopeful", "vile", "panic", "cheer", "sorrow", "sudden", "reliable"};

struct EmotionEntry {
    const char* token;
    const char* labels;
};

constexpr EmotionEntry kEmotionEntries[] = {
    {"furious", "anger"},   {"hopeful", "anticipation"}, {"vile", "disgust"},
    {"panic", "fear"},      {"cheer", "joy"},            {"sorrow", "sadness"},
    {"sudden", "surprise"}, {"reliable", "trust"},
    // Multi-label entries exercising the lexicon format; never generated.
    {"turmoil", "fear,sadness"},
    {"windfall", "joy,surprise"},
};

/// Neutral padding, screened the same way as the lexicon tokens.
constexpr const char* kFillers[] = {
    "market", "session", "outlook", "margin", "board",  "sector",
    "analyst", "figure",  "level",   "range",  "metric", "chart",
    "signal",  "factor",  "volume",  "report", "index",
};
constexpr std::size_t kFillerCount = sizeof(kFillers) / sizeof(kFillers[0]);

constexpr std::size_t kTokensPerSentence = 25;
constexpr std::size_t kSentencesPerDoc = 3;
constexpr int kMaxAttitudeTokens = 8;
constexpr double kAnchorScore = 0.8;  // |score| of bullish/bearish

/// One attainable per-sentence attitude: pos x bullish + neg x bearish
/// gives a sentence attitude of kAnchorScore * (pos - neg) / (pos + neg).
struct Mix {
    int pos = 0;
    int neg = 0;
    double mean = 0.0;
};

/// All attainable sentence attitudes with at most kMaxAttitudeTokens
/// tokens, sorted by value, each value kept with its cheapest mix.
const std::vector<Mix>& attitude_mixes() {
    static const std::vector<Mix> mixes = [] {
        std::vector<Mix> all{{0, 0, 0.0}};
        for (int total = 1; total <= kMaxAttitudeTokens; ++total) {
            for (int pos = 0; pos <= total; ++pos) {
                const int neg = total - pos;
                all.push_back(
                    {pos, neg, kAnchorScore * (pos - neg) / static_cast<double>(total)});
            }
        }
        std::sort(all.begin(), all.end(), [](const Mix& a, const Mix& b) {
            if (a.mean != b.mean) return a.mean < b.mean;
            return a.pos + a.neg < b.pos + b.neg;
        });
        std::vector<Mix> unique;
        for (const Mix& m : all) {
            if (unique.empty() || unique.back().mean != m.mean) unique.push_back(m);
        }
        return unique;
    }();
    return mixes;
}

/// The two attainable attitudes bracketing the target, plus how many of the
/// day's `sentences` should use the upper one so the mean lands on target.
struct AttitudePlan {
    Mix low;
    Mix high;
    std::size_t high_count = 0;
};

AttitudePlan plan_attitude(double target, std::size_t sentences) {
    const auto& mixes = attitude_mixes();
    if (target < mixes.front().mean || target > mixes.back().mean) {
        throw Error(errc::invalid_argument,
                    "planted attitude " + io::format_double(target) + " outside [" +
                        io::format_double(mixes.front().mean) + ", " +
                        io::format_double(mixes.back().mean) + "]");
    }
    AttitudePlan plan;
    const auto upper = std::lower_bound(
        mixes.begin(), mixes.end(), target,
        [](const Mix& m, double value) { return m.mean < value; });
    plan.high = *upper;
    plan.low = upper == mixes.begin() ? *upper : *(upper - 1);
    if (plan.high.mean > plan.low.mean) {
        const double frac = (target - plan.low.mean) / (plan.high.mean - plan.low.mean);
        plan.high_count = static_cast<std::size_t>(
            std::llround(frac * static_cast<double>(sentences)));
        plan.high_count = std::min(plan.high_count, sentences);
    }
    return plan;
}

std::string build_sentence(const Mix& mix, const std::array<std::size_t, 8>& emotion_counts,
                           bool past, Rng& rng) {
    std::vector<std::string> tokens;
    for (int k = 0; k < mix.pos; ++k) tokens.emplace_back("bullish");
    for (int k = 0; k < mix.neg; ++k) tokens.emplace_back("bearish");
    for (std::size_t e = 0; e < 8; ++e) {
        for (std::size_t k = 0; k < emotion_counts[e]; ++k) {
            tokens.emplace_back(kGenEmotionTokens[e]);
        }
    }
    if (past) tokens.emplace_back("yesterday");
    if (tokens.size() > kTokensPerSentence) {
        throw Error(errc::invalid_argument,
                    "planted targets exceed the sentence token budget (" +
                        std::to_string(tokens.size()) + " > " +
                        std::to_string(kTokensPerSentence) + ")");
    }
    while (tokens.size() < kTokensPerSentence) {
        tokens.emplace_back(kFillers[rng.next_below(kFillerCount)]);
    }
    rng.shuffle(tokens);

    std::string sentence;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) sentence += ' ';
        sentence += tokens[i];
    }
    sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
    sentence += '.';
    return sentence;
}

void synthesize_bar(ingest::PriceBar& bar, double prev_close, double close, double vol,
                    Rng& intrabar, Rng& volume) {
    bar.open = prev_close;
    bar.close = close;
    bar.adj_close = close;
    const double pad = 0.5 * std::fabs(vol) + 0.002;
    bar.high = std::max(bar.open, bar.close) * (1.0 + pad * intrabar.next_unit());
    bar.low = std::min(bar.open, bar.close) * (1.0 - pad * intrabar.next_unit());
    bar.volume = std::floor(1e6 * (0.5 + volume.next_unit()));
}

}  // namespace

std::vector<Date> business_calendar(Date start, std::size_t n) {
    std::vector<Date> out;
    out.reserve(n);
    Date d = start;
    while (d.is_weekend()) d = d.add_days(1);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(d);
        d = d.next_business_day();
    }
    return out;
}

std::vector<Date> daily_calendar(Date start, std::size_t n) {
    std::vector<Date> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(start.add_days(static_cast<int>(i)));
    return out;
}

ingest::PriceSeries gen_random_walk(std::size_t n, double drift, double vol,
                                    std::uint64_t seed, Date start, double start_price) {
    if (n == 0) throw Error(errc::invalid_argument, "need at least one bar");
    if (!(start_price > 0.0)) throw Error(errc::invalid_argument, "start price must be > 0");

    Rng returns(seed, kReturns);
    Rng intrabar(seed, kIntrabar);
    Rng volume(seed, kVolume);

    const auto dates = business_calendar(start, n);
    ingest::PriceSeries series;
    series.bars.resize(n);
    double close = start_price;
    for (std::size_t t = 0; t < n; ++t) {
        const double prev = close;
        if (t > 0) close = prev * std::exp(drift + vol * returns.next_normal());
        series.bars[t].date = dates[t];
        synthesize_bar(series.bars[t], prev, close, vol, intrabar, volume);
    }
    series.validate();
    return series;
}

ingest::PriceSeries gen_trend_regime(std::size_t n, std::uint64_t seed, double drift_mag,
                                     double vol, std::size_t regime_min,
                                     std::size_t regime_max, Date start,
                                     double start_price) {
    if (n == 0) throw Error(errc::invalid_argument, "need at least one bar");
    if (regime_min == 0 || regime_max < regime_min) {
        throw Error(errc::invalid_argument, "need 1 <= regime_min <= regime_max");
    }
    if (!(start_price > 0.0)) throw Error(errc::invalid_argument, "start price must be > 0");

    Rng returns(seed, kReturns);
    Rng intrabar(seed, kIntrabar);
    Rng volume(seed, kVolume);
    Rng regime(seed, kRegime);

    const auto draw_length = [&] {
        return regime_min + regime.next_below(regime_max - regime_min + 1);
    };
    double direction = regime.next_unit() < 0.5 ? 1.0 : -1.0;
    std::size_t remaining = draw_length();

    const auto dates = business_calendar(start, n);
    ingest::PriceSeries series;
    series.bars.resize(n);
    double close = start_price;
    for (std::size_t t = 0; t < n; ++t) {
        const double prev = close;
        if (t > 0) {
            if (remaining == 0) {
                direction = -direction;
                remaining = draw_length();
            }
            close = prev * std::exp(direction * drift_mag + vol * returns.next_normal());
            --remaining;
        }
        series.bars[t].date = dates[t];
        synthesize_bar(series.bars[t], prev, close, vol, intrabar, volume);
    }
    series.validate();
    return series;
}

DatedSeries gen_ar1(std::size_t n, double phi, std::uint64_t seed, double sigma,
                    Date start) {
    if (n == 0) throw Error(errc::invalid_argument, "need at least one observation");
    Rng rng(seed, kReturns);
    double x = 0.0;
    for (int burn = 0; burn < 50; ++burn) x = phi * x + sigma * rng.next_normal();

    DatedSeries series;
    series.dates = business_calendar(start, n);
    series.values.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        x = phi * x + sigma * rng.next_normal();
        series.values.push_back(x);
    }
    return series;
}

std::pair<DatedSeries, DatedSeries> gen_causal_pair(std::size_t n, double a_self,
                                                    double b_cross, double noise,
                                                    std::uint64_t seed, Date start) {
    if (n == 0) throw Error(errc::invalid_argument, "need at least one observation");
    Rng rng_x(seed, 0);
    Rng rng_y(seed, 1);

    DatedSeries x_series;
    DatedSeries y_series;
    x_series.dates = business_calendar(start, n);
    y_series.dates = x_series.dates;
    x_series.values.reserve(n);
    y_series.values.reserve(n);

    double x = 0.0;
    double y = 0.0;
    const auto step = [&] {
        const double x_prev = x;
        x = a_self * x_prev + noise * rng_x.next_normal();
        y = a_self * y + b_cross * x_prev + noise * rng_y.next_normal();
    };
    for (int burn = 0; burn < 50; ++burn) step();
    for (std::size_t t = 0; t < n; ++t) {
        step();
        x_series.values.push_back(x);
        y_series.values.push_back(y);
    }
    return {std::move(x_series), std::move(y_series)};
}

ingest::AttitudeLexicon fixture_attitude_lexicon() {
    ingest::AttitudeLexicon lex;
    for (const auto& entry : kAttitudeEntries) lex.entries[entry.token] = entry.score;
    for (const char* negator : kNegators) lex.negators.insert(negator);
    return lex;
}

ingest::EmotionLexicon fixture_emotion_lexicon() {
    ingest::EmotionLexicon lex;
    for (const auto& entry : kEmotionEntries) {
        std::uint8_t mask = 0;
        std::string_view labels(entry.labels);
        std::size_t pos = 0;
        while (pos <= labels.size()) {
            auto comma = labels.find(',', pos);
            if (comma == std::string_view::npos) comma = labels.size();
            mask = static_cast<std::uint8_t>(
                mask | (1u << ingest::emotion_index(labels.substr(pos, comma - pos))));
            if (comma == labels.size()) break;
            pos = comma + 1;
        }
        lex.entries[entry.token] = mask;
    }
    return lex;
}

void save_fixture_lexicons(const std::string& attitude_path,
                           const std::string& emotion_path) {
    std::string attitude = "# synthetic attitude lexicon: token<TAB>score\n";
    for (const auto& entry : kAttitudeEntries) {
        attitude += entry.token;
        attitude += '\t';
        attitude += io::format_double(entry.score);
        attitude += '\n';
    }
    attitude += "[negators]\n";
    for (const char* negator : kNegators) {
        attitude += negator;
        attitude += '\n';
    }
    io::atomic_write(attitude_path, attitude);

    std::string emotion = "# synthetic emotion lexicon: token<TAB>labels\n";
    for (const auto& entry : kEmotionEntries) {
        emotion += entry.token;
        emotion += '\t';
        emotion += entry.labels;
        emotion += '\n';
    }
    io::atomic_write(emotion_path, emotion);
}

SignalPlan gen_signal_targets(const std::vector<Date>& calendar, std::uint64_t seed,
                              double past_fraction) {
    if (past_fraction < 0.0 || past_fraction > 1.0) {
        throw Error(errc::invalid_argument, "past fraction must lie in [0, 1]");
    }
    Rng rng(seed);
    SignalPlan plan;
    plan.signals.reserve(calendar.size());
    for (const Date& date : calendar) {
        sentiment::DailySignal signal;
        signal.date = date;
        signal.doc_count = 1 + static_cast<std::size_t>(rng.next_below(4));

        if (rng.next_unit() >= 0.15) signal.attitude = rng.next_unit() * 1.2 - 0.6;

        if (rng.next_unit() >= 0.10) {
            const double total = 0.10 + 0.35 * rng.next_unit();
            std::array<double, 8> weights{};
            double weight_sum = 0.0;
            for (double& w : weights) {
                w = 0.05 + rng.next_unit();
                weight_sum += w;
            }
            for (std::size_t k = 0; k < 8; ++k) {
                signal.emotions[k] = total * weights[k] / weight_sum;
            }
        }

        if (rng.next_unit() < past_fraction) plan.past_days.push_back(date);
        plan.signals.push_back(signal);
    }
    return plan;
}

std::vector<ingest::Document> gen_corpus(const std::vector<Date>& calendar,
                                         const std::vector<sentiment::DailySignal>& planted,
                                         const std::vector<Date>& past_days,
                                         std::uint64_t seed, const std::string& ticker) {
    for (std::size_t i = 1; i < calendar.size(); ++i) {
        if (!(calendar[i - 1] < calendar[i])) {
            throw Error(errc::invalid_argument, "calendar dates must be strictly increasing");
        }
    }
    std::vector<std::string> tags;
    if (!ticker.empty()) tags.push_back(ingest::normalize_ticker(ticker));

    std::unordered_map<std::int32_t, const sentiment::DailySignal*> by_date;
    for (const auto& s : planted) by_date[s.date.serial()] = &s;
    std::unordered_set<std::int32_t> past;
    for (const Date& d : past_days) past.insert(d.serial());

    std::vector<ingest::Document> docs;
    for (const Date& date : calendar) {
        const auto it = by_date.find(date.serial());
        if (it == by_date.end() || it->second->doc_count == 0) continue;
        const sentiment::DailySignal& target = *it->second;
        const bool is_past = past.count(date.serial()) > 0;
        const std::size_t n_sentences = target.doc_count * kSentencesPerDoc;
        const std::size_t n_tokens = n_sentences * kTokensPerSentence;

        // Per-day generator stream keyed by the date, so a day's documents
        // do not depend on which other days are planted.
        Rng rng(seed, static_cast<std::uint64_t>(static_cast<std::uint32_t>(date.serial())));

        const AttitudePlan attitude = plan_attitude(target.attitude, n_sentences);

        // Integer emotion-token counts whose frequency against the day's
        // full token count reproduces the target, spread round-robin.
        std::array<std::size_t, 8> day_counts{};
        for (std::size_t k = 0; k < 8; ++k) {
            if (target.emotions[k] < 0.0 || target.emotions[k] > 1.0) {
                throw Error(errc::invalid_argument, "planted emotion outside [0, 1]");
            }
            day_counts[k] = static_cast<std::size_t>(
                std::llround(target.emotions[k] * static_cast<double>(n_tokens)));
        }

        std::vector<std::string> sentences;
        sentences.reserve(n_sentences);
        for (std::size_t s = 0; s < n_sentences; ++s) {
            const Mix& mix = s < attitude.high_count ? attitude.high : attitude.low;
            std::array<std::size_t, 8> emotion_counts{};
            for (std::size_t k = 0; k < 8; ++k) {
                emotion_counts[k] = day_counts[k] / n_sentences +
                                    (s < day_counts[k] % n_sentences ? 1 : 0);
            }
            sentences.push_back(build_sentence(mix, emotion_counts, is_past, rng));
        }

        for (std::size_t d = 0; d < target.doc_count; ++d) {
            ingest::Document doc;
            doc.date = date;
            doc.tags = tags;
            doc.source = "synth";
            for (std::size_t k = 0; k < kSentencesPerDoc; ++k) {
                if (k > 0) doc.text += ' ';
                doc.text += sentences[d * kSentencesPerDoc + k];
            }
            docs.push_back(std::move(doc));
        }
    }
    return docs;
}

}  // namespace smkt::synth
