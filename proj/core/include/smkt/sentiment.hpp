#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "smkt/dates.hpp"
#include "smkt/ingest.hpp"

namespace smkt::sentiment {

enum class TemporalTag { past, present, future, unknown };

std::string_view temporal_tag_name(TemporalTag tag);

enum class Mode { standard, temporal };

Mode parse_mode(std::string_view name);  // "standard" | "temporal"
std::string_view mode_name(Mode mode);

/// Per-sentence extraction result. `contributes` is false exactly for
/// past-tagged sentences analyzed in temporal mode; such sentences are
/// excluded from daily aggregation entirely.
struct SentenceSentiment {
    double attitude = 0.0;                        // in [-1, 1]
    std::array<std::size_t, 8> emotion_counts{};  // kEmotions order
    std::size_t token_count = 0;
    TemporalTag tag = TemporalTag::unknown;
    bool contributes = true;
};

/// One day of aggregated signal. Emotions are normalized token frequencies
/// in [0, 1], kEmotions order. doc_count counts documents dated that day.
struct DailySignal {
    Date date;
    double attitude = 0.0;
    std::array<double, 8> emotions{};
    std::size_t doc_count = 0;
};

/// All sentence results of one document, keyed by the document date.
struct ScoredDocument {
    Date date;
    std::vector<SentenceSentiment> sentences;
};

/// Splits on '.', '!' or '?' when followed by whitespace or end of text.
/// The terminator stays with its sentence; blank sentences are dropped.
std::vector<std::string> split_sentences(std::string_view text);

/// Lowercased tokens split on non-alphanumeric boundaries. A '$' is kept as
/// a token prefix when directly followed by a word character; apostrophes
/// are kept when surrounded by word characters. Bytes >= 0x80 (multi-byte
/// UTF-8 sequences) count as word characters.
std::vector<std::string> tokenize(std::string_view sentence);

/// Mean of matched lexicon scores; a match preceded by a negator within the
/// 3 preceding tokens contributes its negated score. Clamped to [-1, 1];
/// 0 when nothing matches.
double score_attitude(const std::vector<std::string>& tokens,
                      const ingest::AttitudeLexicon& lex);

/// Each matched token increments every emotion of its lexicon entry by 1.
std::array<std::size_t, 8> count_emotions(const std::vector<std::string>& tokens,
                                          const ingest::EmotionLexicon& lex);

/// Rule cascade over the token sequence:
///   future:  will, shall, tomorrow, "going to", "next <time-unit>"
///   past:    was, were, had, did, yesterday, "last <time-unit>",
///            or any token of length >= 4 ending in "ed"
///   present: is, are, has, have, says, expects
///   otherwise unknown.
TemporalTag tag_temporal(const std::vector<std::string>& tokens);
TemporalTag tag_temporal(std::string_view sentence);

/// Scores every sentence of the document. Sentences that tokenize to
/// nothing are dropped (token_count must stay positive).
std::vector<SentenceSentiment> analyze_document(const ingest::Document& doc,
                                                const ingest::AttitudeLexicon& attitude_lex,
                                                const ingest::EmotionLexicon& emotion_lex,
                                                Mode mode);

std::vector<ScoredDocument> analyze_corpus(const std::vector<ingest::Document>& docs,
                                           const ingest::AttitudeLexicon& attitude_lex,
                                           const ingest::EmotionLexicon& emotion_lex,
                                           Mode mode);

/// One DailySignal per calendar date, in calendar order. Attitude is the
/// mean attitude of contributing sentences dated that day; emotion k is
/// (sum of emotion-k counts) / (sum of token counts) over contributing
/// sentences. Days without documents yield an all-zero signal.
std::vector<DailySignal> aggregate_daily(const std::vector<ScoredDocument>& docs,
                                         const std::vector<Date>& calendar);

/// Daily-signal CSV:
/// date,attitude,anger,anticipation,disgust,fear,joy,sadness,surprise,trust,doc_count
void save_signals(const std::vector<DailySignal>& signals, const std::string& path,
                  const std::string& config_json = "");
std::vector<DailySignal> load_signals(const std::string& path);

}  // namespace smkt::sentiment
