#include "smkt/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <json.hpp>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"

namespace smkt::ingest {
namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

bool contains_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

/// Cashtag grammar: 1-6 uppercase ASCII letters, digits, or dots.
bool valid_ticker(std::string_view t) {
    if (t.empty() || t.size() > 6) return false;
    return std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.';
    });
}

/// Normalizes a raw tag ("$aapl", "AAPL") to ticker form; empty on failure.
std::string normalize_tag(std::string_view raw) {
    if (!raw.empty() && raw.front() == '$') raw.remove_prefix(1);
    std::string up(raw);
    for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return valid_ticker(up) ? up : std::string();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            if (pos < text.size()) lines.emplace_back(text.substr(pos));
            break;
        }
        std::string line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        pos = nl + 1;
    }
    return lines;
}

void validate_bar(const PriceBar& b, std::size_t index) {
    const auto fail = [&](const std::string& what) {
        throw Error(errc::invalid_bar, "bar " + std::to_string(index) + " (" +
                                           b.date.to_string() + "): " + what);
    };
    for (double v : {b.open, b.high, b.low, b.close, b.adj_close}) {
        if (!std::isfinite(v) || v <= 0.0) fail("non-positive or non-finite price");
    }
    if (!std::isfinite(b.volume) || b.volume < 0.0) fail("negative volume");
    if (b.low > b.high) fail("low above high");
    if (b.open < b.low || b.open > b.high) fail("open outside [low, high]");
    if (b.close < b.low || b.close > b.high) fail("close outside [low, high]");
}

}  // namespace

std::size_t emotion_index(std::string_view name) {
    for (std::size_t i = 0; i < kEmotions.size(); ++i) {
        if (kEmotions[i] == name) return i;
    }
    return kEmotions.size();
}

std::vector<Date> PriceSeries::dates() const {
    std::vector<Date> out;
    out.reserve(bars.size());
    for (const auto& b : bars) out.push_back(b.date);
    return out;
}

std::vector<double> PriceSeries::adj_close() const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const auto& b : bars) out.push_back(b.adj_close);
    return out;
}

std::vector<double> PriceSeries::close() const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const auto& b : bars) out.push_back(b.close);
    return out;
}

std::vector<double> PriceSeries::adjusted_high() const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const auto& b : bars) out.push_back(b.high * b.adj_close / b.close);
    return out;
}

std::vector<double> PriceSeries::adjusted_low() const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const auto& b : bars) out.push_back(b.low * b.adj_close / b.close);
    return out;
}

void PriceSeries::validate() const {
    for (std::size_t i = 0; i < bars.size(); ++i) validate_bar(bars[i], i);
    for (std::size_t i = 1; i < bars.size(); ++i) {
        if (!(bars[i - 1].date < bars[i].date)) {
            throw Error(errc::non_monotonic_dates,
                        "duplicate or out-of-order date " + bars[i].date.to_string());
        }
    }
}

PriceSeries load_prices(const std::string& path) {
    const std::string text = io::read_file(path);
    const auto lines = split_lines(text);

    std::vector<std::string> header;
    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (is_blank(line) || line.starts_with('#')) continue;
        header = io::split_csv_line(line);
        for (auto& h : header) h = to_lower(io::trim(h));
        ++i;
        break;
    }
    if (header.empty()) throw Error(errc::missing_column, path + ": no header row");

    const auto col = [&](std::string_view name) -> int {
        const auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : static_cast<int>(it - header.begin());
    };
    const int c_date = col("date");
    const int c_open = col("open");
    const int c_high = col("high");
    const int c_low = col("low");
    const int c_close = col("close");
    const int c_adj = col("adj_close");
    const int c_vol = col("volume");
    if (c_date < 0) throw Error(errc::missing_column, path + ": missing column 'date'");
    if (c_close < 0 && c_adj < 0) {
        throw Error(errc::missing_column,
                    path + ": need at least one of 'close'/'adj_close'");
    }

    PriceSeries series;
    for (; i < lines.size(); ++i) {
        const std::size_t row = i + 1;
        const std::string& line = lines[i];
        if (is_blank(line) || line.starts_with('#')) continue;
        const auto cells = io::split_csv_line(line);
        if (cells.size() != header.size()) {
            throw Error(errc::malformed_line,
                        path + " row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
        }
        const auto num = [&](int c) {
            const std::string_view cell = io::trim(cells[static_cast<std::size_t>(c)]);
            double v = 0.0;
            if (!io::parse_double(cell, v)) {
                throw Error(errc::malformed_number, path + " row " + std::to_string(row) +
                                                        ": '" + std::string(cell) + "'");
            }
            return v;
        };

        PriceBar bar;
        const std::string_view date_cell = io::trim(cells[static_cast<std::size_t>(c_date)]);
        const auto d = Date::parse(date_cell);
        if (!d) {
            throw Error(errc::malformed_line, path + " row " + std::to_string(row) +
                                                  ": bad date '" + std::string(date_cell) +
                                                  "'");
        }
        bar.date = *d;
        // Resolve close first: an absent close falls back to adj_close and
        // vice versa; absent OHLC falls back to the (raw) close.
        bar.close = c_close >= 0 ? num(c_close) : num(c_adj);
        bar.adj_close = c_adj >= 0 ? num(c_adj) : bar.close;
        bar.open = c_open >= 0 ? num(c_open) : bar.close;
        bar.high = c_high >= 0 ? num(c_high) : bar.close;
        bar.low = c_low >= 0 ? num(c_low) : bar.close;
        bar.volume = c_vol >= 0 ? num(c_vol) : 0.0;
        validate_bar(bar, series.bars.size());
        series.bars.push_back(bar);
    }

    std::stable_sort(series.bars.begin(), series.bars.end(),
                     [](const PriceBar& a, const PriceBar& b) { return a.date < b.date; });
    for (std::size_t k = 1; k < series.bars.size(); ++k) {
        if (!(series.bars[k - 1].date < series.bars[k].date)) {
            throw Error(errc::non_monotonic_dates,
                        path + ": duplicate date " + series.bars[k].date.to_string());
        }
    }
    return series;
}

void save_prices(const PriceSeries& series, const std::string& path,
                 const std::string& config_json) {
    std::string out;
    if (!config_json.empty()) out += "# config: " + config_json + "\n";
    out += "date,open,high,low,close,adj_close,volume\n";
    for (const auto& b : series.bars) {
        out += b.date.to_string();
        for (double v : {b.open, b.high, b.low, b.close, b.adj_close, b.volume}) {
            out += ',';
            out += io::format_double(v);
        }
        out += '\n';
    }
    io::atomic_write(path, out);
}

DocumentLoadResult load_documents(const std::string& path) {
    const std::string text = io::read_file(path);
    const auto lines = split_lines(text);

    DocumentLoadResult result;
    std::size_t records = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (is_blank(line)) continue;
        ++records;
        const std::size_t line_no = i + 1;
        const auto reject = [&] { result.skipped_lines.push_back(line_no); };

        const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            reject();
            continue;
        }
        if (!j.contains("date") || !j["date"].is_string() || !j.contains("text") ||
            !j["text"].is_string()) {
            reject();
            continue;
        }
        const auto date = Date::parse(j["date"].get<std::string>());
        if (!date) {
            reject();
            continue;
        }
        Document doc;
        doc.date = *date;
        doc.text = j["text"].get<std::string>();
        if (is_blank(doc.text)) {
            reject();
            continue;
        }
        bool ok = true;
        if (j.contains("tags")) {
            if (!j["tags"].is_array()) {
                ok = false;
            } else {
                for (const auto& t : j["tags"]) {
                    if (!t.is_string()) {
                        ok = false;
                        break;
                    }
                    std::string tag = normalize_tag(t.get<std::string>());
                    if (tag.empty()) {
                        ok = false;
                        break;
                    }
                    doc.tags.push_back(std::move(tag));
                }
            }
        }
        if (!ok) {
            reject();
            continue;
        }
        if (j.contains("source")) {
            if (!j["source"].is_string()) {
                reject();
                continue;
            }
            doc.source = j["source"].get<std::string>();
        }
        std::sort(doc.tags.begin(), doc.tags.end());
        doc.tags.erase(std::unique(doc.tags.begin(), doc.tags.end()), doc.tags.end());
        result.documents.push_back(std::move(doc));
    }

    if (records == 0) throw Error(errc::empty_corpus, path);
    if (result.documents.empty()) {
        throw Error(errc::all_lines_malformed,
                    path + ": " + std::to_string(records) + " records, none valid");
    }
    std::stable_sort(result.documents.begin(), result.documents.end(),
                     [](const Document& a, const Document& b) { return a.date < b.date; });
    return result;
}

void save_documents(const std::vector<Document>& docs, const std::string& path) {
    std::string out;
    for (const auto& doc : docs) {
        nlohmann::json j;
        j["date"] = doc.date.to_string();
        j["text"] = doc.text;
        if (!doc.tags.empty()) {
            auto tags = nlohmann::json::array();
            for (const auto& tag : doc.tags) tags.push_back("$" + tag);
            j["tags"] = tags;
        }
        if (!doc.source.empty()) j["source"] = doc.source;
        out += j.dump();
        out += '\n';
    }
    io::atomic_write(path, out);
}

namespace {

/// Whole-token cashtag match: split on whitespace, strip trailing
/// punctuation, then the token must equal "$" + ticker with the letters
/// matched case-insensitively.
bool text_has_cashtag(std::string_view text, std::string_view ticker) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        std::string_view token = text.substr(pos, end - pos);
        pos = end;
        while (!token.empty() && std::ispunct(static_cast<unsigned char>(token.back())) &&
               token.back() != '$') {
            token.remove_suffix(1);
        }
        if (token.size() != ticker.size() + 1 || token.front() != '$') continue;
        bool match = true;
        for (std::size_t k = 0; k < ticker.size(); ++k) {
            const char c =
                static_cast<char>(std::toupper(static_cast<unsigned char>(token[k + 1])));
            if (c != ticker[k]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace

std::string normalize_ticker(std::string ticker) {
    if (!ticker.empty() && ticker.front() == '$') ticker.erase(0, 1);
    for (char& c : ticker) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!valid_ticker(ticker)) throw Error(errc::invalid_ticker, "'" + ticker + "'");
    return ticker;
}

std::vector<Document> filter_by_cashtag(const std::vector<Document>& docs,
                                        std::string ticker) {
    ticker = normalize_ticker(std::move(ticker));

    std::vector<Document> kept;
    for (const auto& doc : docs) {
        const bool tagged =
            std::find(doc.tags.begin(), doc.tags.end(), ticker) != doc.tags.end();
        if (tagged || text_has_cashtag(doc.text, ticker)) kept.push_back(doc);
    }
    return kept;
}

AttitudeLexicon load_attitude_lexicon(const std::string& path) {
    const std::string text = io::read_file(path);
    const auto lines = split_lines(text);

    AttitudeLexicon lex;
    bool in_negators = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = io::trim(lines[i]);
        if (line.empty() || line.starts_with('#')) continue;
        if (line.front() == '[') {
            if (line == "[negators]") {
                in_negators = true;
                continue;
            }
            throw Error(errc::malformed_line, path + " line " + std::to_string(line_no) +
                                                  ": unknown section " + std::string(line));
        }
        if (in_negators) {
            if (contains_whitespace(line)) {
                throw Error(errc::malformed_line, path + " line " + std::to_string(line_no) +
                                                      ": negator contains whitespace");
            }
            if (!lex.negators.insert(to_lower(line)).second) ++lex.duplicate_count;
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw Error(errc::malformed_line,
                        path + " line " + std::to_string(line_no) + ": missing tab");
        }
        const std::string token = to_lower(io::trim(line.substr(0, tab)));
        const std::string_view score_text = io::trim(line.substr(tab + 1));
        if (token.empty() || contains_whitespace(token)) {
            throw Error(errc::malformed_line,
                        path + " line " + std::to_string(line_no) + ": bad token");
        }
        double score = 0.0;
        if (!io::parse_double(score_text, score)) {
            throw Error(errc::malformed_line, path + " line " + std::to_string(line_no) +
                                                  ": unparseable score '" +
                                                  std::string(score_text) + "'");
        }
        if (score < -1.0 || score > 1.0) {
            throw Error(errc::score_out_of_range, path + " line " + std::to_string(line_no) +
                                                      ": " + io::format_double(score));
        }
        if (!lex.entries.emplace(token, score).second) {
            lex.entries[token] = score;  // last wins
            ++lex.duplicate_count;
        }
    }
    return lex;
}

EmotionLexicon load_emotion_lexicon(const std::string& path) {
    const std::string text = io::read_file(path);
    const auto lines = split_lines(text);

    EmotionLexicon lex;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = io::trim(lines[i]);
        if (line.empty() || line.starts_with('#')) continue;
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw Error(errc::malformed_line,
                        path + " line " + std::to_string(line_no) + ": missing tab");
        }
        const std::string token = to_lower(io::trim(line.substr(0, tab)));
        if (token.empty() || contains_whitespace(token)) {
            throw Error(errc::malformed_line,
                        path + " line " + std::to_string(line_no) + ": bad token");
        }
        std::uint8_t mask = 0;
        const std::string_view rest = io::trim(line.substr(tab + 1));
        std::size_t pos = 0;
        bool any = false;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string_view::npos) comma = rest.size();
            const std::string label = to_lower(io::trim(rest.substr(pos, comma - pos)));
            if (!label.empty()) {
                const std::size_t idx = emotion_index(label);
                if (idx >= kEmotions.size()) {
                    throw Error(errc::malformed_line, path + " line " +
                                                          std::to_string(line_no) +
                                                          ": unknown emotion '" + label + "'");
                }
                mask = static_cast<std::uint8_t>(mask | (1u << idx));
                any = true;
            }
            if (comma == rest.size()) break;
            pos = comma + 1;
        }
        if (!any) {
            throw Error(errc::malformed_line,
                        path + " line " + std::to_string(line_no) + ": empty emotion list");
        }
        if (!lex.entries.emplace(token, mask).second) {
            lex.entries[token] = mask;
            ++lex.duplicate_count;
        }
    }
    return lex;
}

}  // namespace smkt::ingest
