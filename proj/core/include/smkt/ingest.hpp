#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smkt/dates.hpp"

namespace smkt::ingest {

/// The eight emotion dimensions, in canonical column order.
inline constexpr std::array<std::string_view, 8> kEmotions = {
    "anger", "anticipation", "disgust", "fear",
    "joy",   "sadness",      "surprise", "trust"};

/// Index of `name` in kEmotions, or kEmotions.size() if it is not one.
std::size_t emotion_index(std::string_view name);

/// One end-of-day price bar. Prices are strictly positive and satisfy
/// low <= open <= high and low <= close <= high.
struct PriceBar {
    Date date;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double adj_close = 0.0;
    double volume = 0.0;
};

/// A date-sorted sequence of price bars with strictly increasing dates.
struct PriceSeries {
    std::vector<PriceBar> bars;

    std::size_t size() const { return bars.size(); }
    bool empty() const { return bars.empty(); }

    std::vector<Date> dates() const;
    std::vector<double> adj_close() const;
    std::vector<double> close() const;
    /// High/low rescaled by adj_close/close so they live on the adjusted scale.
    std::vector<double> adjusted_high() const;
    std::vector<double> adjusted_low() const;

    /// Throws Error(invalid_bar) / Error(non_monotonic_dates) on violation.
    void validate() const;
};

/// A dated text document with optional cashtag annotations.
/// Tags are stored normalized: uppercase, no leading '$'.
struct Document {
    Date date;
    std::string text;
    std::vector<std::string> tags;
    std::string source;
};

struct DocumentLoadResult {
    std::vector<Document> documents;         // sorted by date (stable)
    std::vector<std::size_t> skipped_lines;  // 1-based line numbers
};

/// Token -> polarity score in [-1, 1], plus a set of negator tokens.
struct AttitudeLexicon {
    std::map<std::string, double> entries;
    std::set<std::string> negators;
    std::size_t duplicate_count = 0;
};

/// Token -> bitmask over kEmotions (bit i set means the token carries
/// emotion kEmotions[i]).
struct EmotionLexicon {
    std::map<std::string, std::uint8_t> entries;
    std::size_t duplicate_count = 0;
};

/// Loads a price CSV. The header must contain `date` and at least one of
/// `adj_close`/`close`; other columns are optional. Absent price columns
/// default to the close, absent volume to 0, so close-only data still loads.
/// Bars are sorted by date; duplicate dates raise non_monotonic_dates.
PriceSeries load_prices(const std::string& path);

/// Writes the canonical CSV header and one row per bar. When `config_json`
/// is non-empty it is embedded first as a `# config: ...` comment line.
void save_prices(const PriceSeries& series, const std::string& path,
                 const std::string& config_json = "");

/// Loads a JSONL corpus (one object per line: date, text, optional tags and
/// source). Malformed lines are skipped and reported by line number.
/// Throws empty_corpus when the file holds no records at all and
/// all_lines_malformed when records exist but none parse.
DocumentLoadResult load_documents(const std::string& path);

/// Writes documents as JSONL in the load_documents schema (tags serialized
/// in cashtag form, e.g. "$AAPL").
void save_documents(const std::vector<Document>& docs, const std::string& path);

/// Uppercases a ticker, drops an optional leading '$', and validates it
/// against the cashtag grammar (1-6 ASCII letters/digits/dots); throws
/// Error(invalid_ticker).
std::string normalize_ticker(std::string ticker);

/// Keeps exactly the documents whose tag set contains `ticker` or whose text
/// contains `$TICKER` as a whole whitespace-delimited token (trailing
/// punctuation stripped, letters matched case-insensitively).
/// The ticker must be 1-6 ASCII letters/digits/dots.
std::vector<Document> filter_by_cashtag(const std::vector<Document>& docs,
                                        std::string ticker);

/// TSV: `token<TAB>score` lines, `#` comments, optional `[negators]` section
/// with one token per line. Duplicate tokens: last one wins, counted.
AttitudeLexicon load_attitude_lexicon(const std::string& path);

/// TSV: `token<TAB>emotion1,emotion2,...` with labels drawn from kEmotions.
EmotionLexicon load_emotion_lexicon(const std::string& path);

}  // namespace smkt::ingest
