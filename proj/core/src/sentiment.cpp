#include "smkt/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"

namespace smkt::sentiment {
namespace {

/// Word characters: ASCII alphanumerics plus any byte >= 0x80, so that
/// multi-byte UTF-8 sequences stay inside one token.
bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

constexpr std::array<std::string_view, 10> kTimeUnits = {
    "day", "days", "week", "weeks", "month", "months", "quarter", "quarters",
    "year", "years"};

bool is_time_unit(std::string_view t) {
    return std::find(kTimeUnits.begin(), kTimeUnits.end(), t) != kTimeUnits.end();
}

bool ends_in_ed(std::string_view t) {
    return t.size() >= 4 && t[t.size() - 2] == 'e' && t[t.size() - 1] == 'd';
}

}  // namespace

std::string_view temporal_tag_name(TemporalTag tag) {
    switch (tag) {
        case TemporalTag::past: return "past";
        case TemporalTag::present: return "present";
        case TemporalTag::future: return "future";
        case TemporalTag::unknown: return "unknown";
    }
    return "unknown";
}

Mode parse_mode(std::string_view name) {
    if (name == "standard") return Mode::standard;
    if (name == "temporal") return Mode::temporal;
    throw Error(errc::invalid_argument,
                "sentiment mode must be 'standard' or 'temporal', got '" +
                    std::string(name) + "'");
}

std::string_view mode_name(Mode mode) {
    return mode == Mode::standard ? "standard" : "temporal";
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    const auto push = [&](std::string_view piece) {
        piece = io::trim(piece);
        if (!piece.empty()) sentences.emplace_back(piece);
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '.' || c == '!' || c == '?') &&
            (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
            push(text.substr(start, i - start + 1));
            start = i + 1;
        }
    }
    if (start < text.size()) push(text.substr(start));
    return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::string cur;
    const auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(sentence[i]);
        if (is_word_char(c)) {
            cur += c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
            continue;
        }
        if (c == '\'' && !cur.empty() && i + 1 < sentence.size() &&
            is_word_char(static_cast<unsigned char>(sentence[i + 1]))) {
            cur += '\'';
            continue;
        }
        flush();
        if (c == '$' && i + 1 < sentence.size() &&
            is_word_char(static_cast<unsigned char>(sentence[i + 1]))) {
            cur = "$";
        }
    }
    flush();
    return tokens;
}

double score_attitude(const std::vector<std::string>& tokens,
                      const ingest::AttitudeLexicon& lex) {
    double sum = 0.0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto it = lex.entries.find(tokens[i]);
        if (it == lex.entries.end()) continue;
        double score = it->second;
        const std::size_t lo = i >= 3 ? i - 3 : 0;
        for (std::size_t k = lo; k < i; ++k) {
            if (lex.negators.count(tokens[k]) > 0) {
                score = -score;
                break;
            }
        }
        sum += score;
        ++matches;
    }
    if (matches == 0) return 0.0;
    return std::clamp(sum / static_cast<double>(matches), -1.0, 1.0);
}

std::array<std::size_t, 8> count_emotions(const std::vector<std::string>& tokens,
                                          const ingest::EmotionLexicon& lex) {
    std::array<std::size_t, 8> counts{};
    for (const auto& token : tokens) {
        const auto it = lex.entries.find(token);
        if (it == lex.entries.end()) continue;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            if (it->second & (1u << k)) ++counts[k];
        }
    }
    return counts;
}

TemporalTag tag_temporal(const std::vector<std::string>& tokens) {
    const auto next_is_unit = [&](std::size_t i) {
        return i + 1 < tokens.size() && is_time_unit(tokens[i + 1]);
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "will" || t == "shall" || t == "tomorrow") return TemporalTag::future;
        if (t == "going" && i + 1 < tokens.size() && tokens[i + 1] == "to") {
            return TemporalTag::future;
        }
        if (t == "next" && next_is_unit(i)) return TemporalTag::future;
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "was" || t == "were" || t == "had" || t == "did" || t == "yesterday") {
            return TemporalTag::past;
        }
        if (t == "last" && next_is_unit(i)) return TemporalTag::past;
        if (ends_in_ed(t)) return TemporalTag::past;
    }
    for (const std::string& t : tokens) {
        if (t == "is" || t == "are" || t == "has" || t == "have" || t == "says" ||
            t == "expects") {
            return TemporalTag::present;
        }
    }
    return TemporalTag::unknown;
}

TemporalTag tag_temporal(std::string_view sentence) {
    return tag_temporal(tokenize(sentence));
}

std::vector<SentenceSentiment> analyze_document(const ingest::Document& doc,
                                                const ingest::AttitudeLexicon& attitude_lex,
                                                const ingest::EmotionLexicon& emotion_lex,
                                                Mode mode) {
    std::vector<SentenceSentiment> out;
    for (const std::string& sentence : split_sentences(doc.text)) {
        const auto tokens = tokenize(sentence);
        if (tokens.empty()) continue;
        SentenceSentiment s;
        s.attitude = score_attitude(tokens, attitude_lex);
        s.emotion_counts = count_emotions(tokens, emotion_lex);
        s.token_count = tokens.size();
        s.tag = tag_temporal(tokens);
        s.contributes = !(mode == Mode::temporal && s.tag == TemporalTag::past);
        out.push_back(s);
    }
    return out;
}

std::vector<ScoredDocument> analyze_corpus(const std::vector<ingest::Document>& docs,
                                           const ingest::AttitudeLexicon& attitude_lex,
                                           const ingest::EmotionLexicon& emotion_lex,
                                           Mode mode) {
    std::vector<ScoredDocument> out;
    out.reserve(docs.size());
    for (const auto& doc : docs) {
        out.push_back({doc.date, analyze_document(doc, attitude_lex, emotion_lex, mode)});
    }
    return out;
}

std::vector<DailySignal> aggregate_daily(const std::vector<ScoredDocument>& docs,
                                         const std::vector<Date>& calendar) {
    for (std::size_t i = 1; i < calendar.size(); ++i) {
        if (!(calendar[i - 1] < calendar[i])) {
            throw Error(errc::invalid_argument, "calendar dates must be strictly increasing");
        }
    }

    struct DayAccum {
        double attitude_sum = 0.0;
        std::size_t sentence_count = 0;
        std::array<std::size_t, 8> emotion_counts{};
        std::size_t token_count = 0;
        std::size_t doc_count = 0;
    };
    std::unordered_map<std::int32_t, DayAccum> days;
    for (const auto& doc : docs) {
        DayAccum& acc = days[doc.date.serial()];
        ++acc.doc_count;
        for (const auto& s : doc.sentences) {
            if (!s.contributes) continue;
            acc.attitude_sum += s.attitude;
            ++acc.sentence_count;
            for (std::size_t k = 0; k < 8; ++k) acc.emotion_counts[k] += s.emotion_counts[k];
            acc.token_count += s.token_count;
        }
    }

    std::vector<DailySignal> out;
    out.reserve(calendar.size());
    for (const Date& date : calendar) {
        DailySignal signal;
        signal.date = date;
        const auto it = days.find(date.serial());
        if (it != days.end()) {
            const DayAccum& acc = it->second;
            signal.doc_count = acc.doc_count;
            if (acc.sentence_count > 0) {
                signal.attitude = acc.attitude_sum / static_cast<double>(acc.sentence_count);
            }
            if (acc.token_count > 0) {
                for (std::size_t k = 0; k < 8; ++k) {
                    signal.emotions[k] = static_cast<double>(acc.emotion_counts[k]) /
                                         static_cast<double>(acc.token_count);
                }
            }
        }
        out.push_back(signal);
    }
    return out;
}

void save_signals(const std::vector<DailySignal>& signals, const std::string& path,
                  const std::string& config_json) {
    std::string out;
    if (!config_json.empty()) out += "# config: " + config_json + "\n";
    out += "date,attitude";
    for (const auto& emo : ingest::kEmotions) {
        out += ',';
        out += emo;
    }
    out += ",doc_count\n";
    for (const auto& s : signals) {
        out += s.date.to_string();
        out += ',';
        out += io::format_double(s.attitude);
        for (double e : s.emotions) {
            out += ',';
            out += io::format_double(e);
        }
        out += ',';
        out += std::to_string(s.doc_count);
        out += '\n';
    }
    io::atomic_write(path, out);
}

std::vector<DailySignal> load_signals(const std::string& path) {
    const io::DatedTable table = io::load_dated_csv(path);
    const std::size_t c_attitude = table.column_index("attitude");
    std::array<std::size_t, 8> c_emotion{};
    for (std::size_t k = 0; k < 8; ++k) {
        c_emotion[k] = table.column_index(ingest::kEmotions[k]);
    }
    const std::size_t c_docs = table.column_index("doc_count");

    std::vector<DailySignal> out;
    out.reserve(table.dates.size());
    for (std::size_t i = 0; i < table.dates.size(); ++i) {
        DailySignal s;
        s.date = table.dates[i];
        s.attitude = table.rows[i][c_attitude];
        for (std::size_t k = 0; k < 8; ++k) s.emotions[k] = table.rows[i][c_emotion[k]];
        const double d = table.rows[i][c_docs];
        if (!(d >= 0.0) || d != std::floor(d)) {
            throw Error(errc::malformed_number,
                        path + ": doc_count must be a non-negative integer");
        }
        s.doc_count = static_cast<std::size_t>(d);
        out.push_back(s);
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (!(out[i - 1].date < out[i].date)) {
            throw Error(errc::non_monotonic_dates, path + ": " + out[i].date.to_string());
        }
    }
    return out;
}

}  // namespace smkt::sentiment
