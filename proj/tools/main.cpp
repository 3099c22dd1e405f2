/// sentimarket — batch front end wiring ingestion, sentiment extraction,
/// econometrics, feature building, and trend classification into files.
///
/// Every artifact embeds the configuration it was produced with (a
/// `# config:` comment in CSV, a `config` field in JSON, an HTML comment in
/// Markdown); re-running a command with the embedded parameters reproduces
/// the numeric content exactly. Failures exit with a distinct code per
/// error class.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smkt/dataset.hpp"
#include "smkt/dates.hpp"
#include "smkt/econ.hpp"
#include "smkt/errors.hpp"
#include "smkt/indicators.hpp"
#include "smkt/ingest.hpp"
#include "smkt/io.hpp"
#include "smkt/sentiment.hpp"
#include "smkt/series.hpp"
#include "smkt/svm.hpp"
#include "smkt/synth.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace smkt;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 42;
    fs::path out_dir = ".";
    std::string format = "csv";  // csv | json | md
};

fs::path out_path(const GlobalOpts& g, const std::string& name) {
    fs::create_directories(g.out_dir);
    return g.out_dir / name;
}

void announce(const fs::path& path) { std::cout << "wrote " << path.string() << "\n"; }

/// Cell renderer shared by the CSV and Markdown table writers.
std::string render_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_number_float()) return io::format_double(v.get<double>());
    return v.get<std::string>();
}

/// Writes a table of homogeneous rows in the requested format. `rows` is an
/// array of objects keyed by `columns`; `base` gets the format's extension.
fs::path write_table(const GlobalOpts& g, const std::string& base,
                     const std::vector<std::string>& columns, const json& rows,
                     const json& config) {
    std::string body;
    fs::path path;
    if (g.format == "json") {
        path = out_path(g, base + ".json");
        json doc;
        doc["config"] = config;
        doc["columns"] = columns;
        doc["rows"] = rows;
        body = doc.dump(2);
        body += '\n';
    } else if (g.format == "md") {
        path = out_path(g, base + ".md");
        body = "<!-- config: " + config.dump() + " -->\n\n";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            body += c == 0 ? "| " : " | ";
            body += columns[c];
        }
        body += " |\n";
        for (std::size_t c = 0; c < columns.size(); ++c) body += c == 0 ? "| ---" : " | ---";
        body += " |\n";
        for (const json& row : rows) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                body += c == 0 ? "| " : " | ";
                body += render_cell(row.at(columns[c]));
            }
            body += " |\n";
        }
    } else {
        path = out_path(g, base + ".csv");
        body = "# config: " + config.dump() + "\n";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c > 0) body += ',';
            body += columns[c];
        }
        body += '\n';
        for (const json& row : rows) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                if (c > 0) body += ',';
                body += render_cell(row.at(columns[c]));
            }
            body += '\n';
        }
    }
    io::atomic_write(path, body);
    announce(path);
    return path;
}

void write_json_doc(const fs::path& path, const json& doc) {
    io::atomic_write(path, doc.dump(2) + "\n");
    announce(path);
}

/// Plot-data CSV: fixed format regardless of --format (consumable by any
/// plotting tool).
void write_plot_csv(const fs::path& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<json>>& rows, const json& config) {
    std::string body = "# config: " + config.dump() + "\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) body += ',';
        body += columns[c];
    }
    body += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) body += ',';
            body += render_cell(row[c]);
        }
        body += '\n';
    }
    io::atomic_write(path, body);
    announce(path);
}

/// One named column of a dated CSV; an empty name falls back to the only
/// column, then to adj_close, then to close.
DatedSeries load_column(const fs::path& path, const std::string& column) {
    const io::DatedTable table = io::load_dated_csv(path);
    std::string name = column;
    if (name.empty()) {
        if (table.columns.size() == 1) {
            name = table.columns.front();
        } else {
            for (const char* candidate : {"adj_close", "close", "value"}) {
                for (const auto& c : table.columns) {
                    if (c == candidate) {
                        name = candidate;
                        break;
                    }
                }
                if (!name.empty()) break;
            }
            if (name.empty()) {
                throw Error(errc::missing_column,
                            path.string() + ": ambiguous columns, pass --column");
            }
        }
    }
    return table.series(name);
}

std::vector<int> parse_lag_list(const std::string& text) {
    std::vector<int> lags;
    for (const auto& field : io::split_csv_line(text)) {
        double v = 0.0;
        if (!io::parse_double(io::trim(field), v) || v < 1 || v != static_cast<int>(v)) {
            throw Error(errc::invalid_argument, "bad lag list entry '" + field + "'");
        }
        lags.push_back(static_cast<int>(v));
    }
    if (lags.empty()) throw Error(errc::invalid_argument, "empty lag list");
    return lags;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& field : io::split_csv_line(text)) {
        double v = 0.0;
        if (!io::parse_double(io::trim(field), v)) {
            throw Error(errc::invalid_argument, "bad numeric list entry '" + field + "'");
        }
        out.push_back(v);
    }
    return out;
}

Date parse_date_arg(const std::string& text) {
    const auto date = Date::parse(text);
    if (!date) throw Error(errc::invalid_argument, "bad date '" + text + "'");
    return *date;
}

// ---------------------------------------------------------------------------
// stationarity
// ---------------------------------------------------------------------------

struct StationarityArgs {
    std::string input;
    std::string column;
    std::string transform = "levels";
    int diff = 0;
    int adf_lag = 1;
    std::size_t acf_lags = 20;
    std::size_t lb_lags = 10;
};

void cmd_stationarity(const GlobalOpts& g, const StationarityArgs& a) {
    DatedSeries s = load_column(a.input, a.column);
    if (a.transform == "pct") s = pct_change(s);
    if (a.diff > 0) s = diff(s, static_cast<std::size_t>(a.diff));

    const econ::StationarityReport report =
        econ::stationarity_report(s, a.acf_lags, a.lb_lags, a.adf_lag);

    json config;
    config["command"] = "stationarity";
    config["input"] = a.input;
    config["column"] = a.column;
    config["transform"] = a.transform;
    config["diff"] = a.diff;
    config["adf_lag"] = a.adf_lag;
    config["acf_lags"] = a.acf_lags;
    config["ljung_box_lags"] = a.lb_lags;
    config["seed"] = g.seed;

    json doc;
    doc["config"] = config;
    doc["n"] = report.n;
    doc["adf"] = {{"t_stat", report.adf.t_stat},
                  {"gamma", report.adf.gamma},
                  {"lag_order", report.adf.lag_order},
                  {"reject_1pct", report.adf.reject_1pct},
                  {"reject_5pct", report.adf.reject_5pct},
                  {"reject_10pct", report.adf.reject_10pct}};
    doc["ljung_box"] = {{"lags", a.lb_lags},
                        {"q", report.ljung_box.q},
                        {"p_value", report.ljung_box.p_value}};
    doc["conf_bound"] = report.conf_bound;
    doc["acf"] = report.acf;
    doc["pacf"] = report.pacf;
    write_json_doc(out_path(g, "stationarity.json"), doc);

    const auto bars = [&](const std::vector<double>& values) {
        std::vector<std::vector<json>> rows;
        for (std::size_t k = 0; k < values.size(); ++k) {
            rows.push_back({json(k + 1), json(values[k]), json(report.conf_bound)});
        }
        return rows;
    };
    write_plot_csv(out_path(g, "acf.csv"), {"lag", "value", "conf_bound"},
                   bars(report.acf), config);
    write_plot_csv(out_path(g, "pacf.csv"), {"lag", "value", "conf_bound"},
                   bars(report.pacf), config);
}

// ---------------------------------------------------------------------------
// ccf
// ---------------------------------------------------------------------------

struct CcfArgs {
    std::string x_path;
    std::string x_column;
    std::string y_path;
    std::string y_column;
    std::size_t max_lag = 10;
    std::string transform = "levels";  // applied to y (price side)
};

void cmd_ccf(const GlobalOpts& g, const CcfArgs& a) {
    DatedSeries x = load_column(a.x_path, a.x_column);
    DatedSeries y = load_column(a.y_path, a.y_column);
    auto [ax, ay] = align(x, y, AlignFill::drop);
    if (a.transform == "pct") {
        ay = pct_change(ay);
        std::tie(ax, ay) = align(ax, ay, AlignFill::drop);
    }
    const econ::CcfReport report = econ::ccf(ax, ay, a.max_lag);

    json config;
    config["command"] = "ccf";
    config["x"] = a.x_path;
    config["x_column"] = a.x_column;
    config["y"] = a.y_path;
    config["y_column"] = a.y_column;
    config["max_lag"] = a.max_lag;
    config["transform"] = a.transform;
    config["seed"] = g.seed;

    std::vector<std::vector<json>> rows;
    for (std::size_t i = 0; i < report.lags.size(); ++i) {
        rows.push_back(
            {json(report.lags[i]), json(report.correlations[i]), json(report.conf_bound)});
    }
    write_plot_csv(out_path(g, "ccf.csv"), {"lag", "corr", "conf_bound"}, rows, config);
}

// ---------------------------------------------------------------------------
// granger
// ---------------------------------------------------------------------------

struct GrangerArgs {
    std::string prices;
    std::string price_column;
    std::vector<std::string> signals;  // mode=path
    std::string columns = "all";       // attitude | emotions | all
    std::string lags = "1,2";
    double threshold = 0.10;
    std::string transform = "pct";
};

void cmd_granger(const GlobalOpts& g, const GrangerArgs& a) {
    if (a.threshold <= 0.0 || a.threshold >= 1.0) {
        throw Error(errc::invalid_argument, "threshold must lie in (0, 1)");
    }
    DatedSeries price = load_column(a.prices, a.price_column);
    if (a.transform == "pct") price = pct_change(price);

    std::vector<std::string> signal_names;
    if (a.columns == "attitude" || a.columns == "all") signal_names.emplace_back("attitude");
    if (a.columns == "emotions" || a.columns == "all") {
        for (const auto& emotion : ingest::kEmotions) signal_names.emplace_back(emotion);
    }
    if (signal_names.empty()) {
        throw Error(errc::invalid_argument, "--columns must be attitude, emotions or all");
    }
    const std::vector<int> lags = parse_lag_list(a.lags);

    json config;
    config["command"] = "granger";
    config["prices"] = a.prices;
    config["price_column"] = a.price_column;
    config["signals"] = a.signals;
    config["columns"] = a.columns;
    config["lags"] = lags;
    config["threshold"] = a.threshold;
    config["transform"] = a.transform;
    config["seed"] = g.seed;

    json rows = json::array();
    for (const std::string& entry : a.signals) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
            throw Error(errc::invalid_argument,
                        "--signals needs mode=path, got '" + entry + "'");
        }
        const std::string mode = entry.substr(0, eq);
        const fs::path path = entry.substr(eq + 1);
        const io::DatedTable table = io::load_dated_csv(path);
        for (const std::string& name : signal_names) {
            const DatedSeries signal = table.series(name);
            auto [s_aligned, p_aligned] = align(signal, price, AlignFill::drop);
            for (const int lag : lags) {
                const auto emit = [&](const econ::GrangerResult& r,
                                      const std::string& direction) {
                    json row;
                    row["signal"] = name;
                    row["mode"] = mode;
                    row["lag"] = lag;
                    row["direction"] = direction;
                    row["f_stat"] = r.f_stat;
                    row["p_value"] = r.p_value;
                    row["n_obs"] = r.n_obs;
                    row["significant"] = r.significant;
                    row["exact_fit"] = r.exact_fit;
                    rows.push_back(std::move(row));
                };
                emit(econ::granger_test(s_aligned, p_aligned, lag, a.threshold),
                     name + "->price");
                emit(econ::granger_test(p_aligned, s_aligned, lag, a.threshold),
                     "price->" + name);
            }
        }
    }
    write_table(g, "granger",
                {"signal", "mode", "lag", "direction", "f_stat", "p_value", "n_obs",
                 "significant", "exact_fit"},
                rows, config);
}

// ---------------------------------------------------------------------------
// sentiment extract
// ---------------------------------------------------------------------------

struct ExtractArgs {
    std::string corpus;
    std::string attitude_lexicon;
    std::string emotion_lexicon;
    std::string mode = "standard";
    std::string ticker;
    std::string calendar = "daily";  // daily | docs
    std::string out = "signals.csv";
};

void cmd_sentiment_extract(const GlobalOpts& g, const ExtractArgs& a) {
    const sentiment::Mode mode = sentiment::parse_mode(a.mode);
    const ingest::AttitudeLexicon attitude_lex =
        ingest::load_attitude_lexicon(a.attitude_lexicon);
    const ingest::EmotionLexicon emotion_lex =
        ingest::load_emotion_lexicon(a.emotion_lexicon);

    ingest::DocumentLoadResult loaded = ingest::load_documents(a.corpus);
    if (!loaded.skipped_lines.empty()) {
        std::cerr << "note: skipped " << loaded.skipped_lines.size()
                  << " malformed corpus line(s)\n";
    }
    std::vector<ingest::Document> docs = std::move(loaded.documents);
    if (!a.ticker.empty()) docs = ingest::filter_by_cashtag(docs, a.ticker);
    if (docs.empty()) throw Error(errc::empty_corpus, "no documents left to analyze");

    const auto scored = sentiment::analyze_corpus(docs, attitude_lex, emotion_lex, mode);

    std::vector<Date> calendar;
    if (a.calendar == "docs") {
        for (const auto& doc : docs) {
            if (calendar.empty() || calendar.back() < doc.date) calendar.push_back(doc.date);
        }
    } else if (a.calendar == "daily") {
        const Date first = docs.front().date;
        const Date last = docs.back().date;
        calendar = synth::daily_calendar(
            first, static_cast<std::size_t>(last.serial() - first.serial()) + 1);
    } else {
        throw Error(errc::invalid_argument, "--calendar must be daily or docs");
    }

    const auto signals = sentiment::aggregate_daily(scored, calendar);

    json config;
    config["command"] = "sentiment extract";
    config["corpus"] = a.corpus;
    config["attitude_lexicon"] = a.attitude_lexicon;
    config["emotion_lexicon"] = a.emotion_lexicon;
    config["mode"] = a.mode;
    config["ticker"] = a.ticker;
    config["calendar"] = a.calendar;
    config["seed"] = g.seed;

    const fs::path path = out_path(g, a.out);
    sentiment::save_signals(signals, path.string(), config.dump());
    announce(path);
}

// ---------------------------------------------------------------------------
// features build
// ---------------------------------------------------------------------------

struct FeaturesArgs {
    std::string prices;
    std::string out = "features.csv";
};

void cmd_features_build(const GlobalOpts& g, const FeaturesArgs& a) {
    const ingest::PriceSeries prices = ingest::load_prices(a.prices);
    const indicators::IndicatorMatrix matrix = indicators::build_indicator_matrix(prices);

    json config;
    config["command"] = "features build";
    config["prices"] = a.prices;
    config["columns"] = matrix.columns;
    config["seed"] = g.seed;

    std::string body = "# config: " + config.dump() + "\ndate";
    for (const auto& column : matrix.columns) {
        body += ',';
        body += column;
    }
    body += '\n';
    for (std::size_t i = 0; i < matrix.dates.size(); ++i) {
        if (!matrix.valid[i]) continue;
        body += matrix.dates[i].to_string();
        for (const double v : matrix.rows[i]) {
            body += ',';
            body += io::format_double(v);
        }
        body += '\n';
    }
    const fs::path path = out_path(g, a.out);
    io::atomic_write(path, body);
    announce(path);
}

/// Reassembles an IndicatorMatrix from a features CSV written by
/// cmd_features_build (every persisted row is valid by construction).
indicators::IndicatorMatrix load_feature_matrix(const fs::path& path) {
    const io::DatedTable table = io::load_dated_csv(path);
    indicators::IndicatorMatrix matrix;
    matrix.columns.assign(indicators::kFeatureNames.begin(), indicators::kFeatureNames.end());
    for (const auto& required : matrix.columns) {
        table.column_index(required);  // throws missing_column when absent
    }
    if (table.columns.size() != matrix.columns.size()) {
        throw Error(errc::dimension_mismatch,
                    path.string() + ": expected exactly the 15 indicator columns");
    }
    matrix.dates = table.dates;
    matrix.rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        std::vector<double> ordered(matrix.columns.size());
        for (std::size_t c = 0; c < matrix.columns.size(); ++c) {
            ordered[c] = row[table.column_index(matrix.columns[c])];
        }
        matrix.rows.push_back(std::move(ordered));
    }
    matrix.valid.assign(matrix.rows.size(), 1);
    return matrix;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct TrainArgs {
    std::string features;
    std::string prices;
    std::string signals;
    std::string scenario = "baseline";
    int horizon = 5;
    double train_fraction = 0.8;
    std::string scope = "train";
    std::size_t folds = 5;
    std::string c_grid;
    std::string gamma_grid;
    double tol = 1e-3;
    int max_passes = 10;
    std::string model_out = "model.json";
    std::string dataset_out = "dataset.csv";
};

void cmd_train(const GlobalOpts& g, const TrainArgs& a) {
    if (a.horizon < 1) throw Error(errc::invalid_argument, "horizon must be >= 1");
    const dataset::Scenario scenario = dataset::parse_scenario(a.scenario);
    const dataset::NormScope scope = dataset::parse_scope(a.scope);

    const ingest::PriceSeries prices = ingest::load_prices(a.prices);
    const indicators::IndicatorMatrix matrix = load_feature_matrix(a.features);

    std::optional<std::vector<sentiment::DailySignal>> signals;
    if (!a.signals.empty()) signals = sentiment::load_signals(a.signals);
    if (dataset::scenario_uses_signals(scenario) && !signals) {
        throw Error(errc::missing_signals,
                    std::string(dataset::scenario_name(scenario)) + " needs --signals");
    }

    const auto labels = dataset::label_horizon(prices, static_cast<std::size_t>(a.horizon));
    dataset::Dataset ds =
        dataset::assemble(matrix, signals ? &*signals : nullptr, scenario, labels);
    ds.horizon = a.horizon;
    ds.seed = g.seed;
    dataset::split(ds, a.train_fraction, g.seed);
    for (const auto& name : dataset::normalize(ds, scope)) {
        std::cerr << "note: zero-variance feature zeroed: " << name << "\n";
    }

    std::vector<std::vector<double>> train_x;
    std::vector<int> train_y;
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        if (ds.split_assignment[i] != dataset::Split::train) continue;
        train_x.push_back(ds.rows[i].features);
        train_y.push_back(ds.rows[i].label);
    }

    const std::vector<double> c_grid =
        a.c_grid.empty() ? svm::kDefaultCGrid : parse_double_list(a.c_grid);
    const std::vector<double> gamma_grid =
        a.gamma_grid.empty() ? svm::kDefaultGammaGrid : parse_double_list(a.gamma_grid);

    const svm::SvmConfig best = svm::grid_search(train_x, train_y, c_grid, gamma_grid,
                                                 a.folds, g.seed, a.tol, a.max_passes);
    svm::TrainedModel model = svm::train(train_x, train_y, best);
    model.feature_names = ds.feature_names;
    model.norm_stats = ds.stats;
    model.norm_scope = ds.norm_scope;

    const fs::path model_path = out_path(g, a.model_out);
    svm::save_model(model, model_path.string());
    announce(model_path);

    const fs::path dataset_path = out_path(g, a.dataset_out);
    fs::path sidecar_path = dataset_path;
    sidecar_path.replace_extension(".json");
    dataset::save_dataset(ds, dataset_path.string(), sidecar_path.string());
    announce(dataset_path);
    announce(sidecar_path);

    std::cout << "selected C=" << io::format_double(best.C)
              << " gamma=" << io::format_double(best.gamma) << " on " << train_x.size()
              << " training rows (" << ds.rows.size() - train_x.size() << " held out)\n";
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateArgs {
    std::string model;
    std::string dataset_csv;
    std::string dataset_sidecar;
    std::string split = "test";  // test | train | all
    std::string out = "eval.json";
};

void cmd_evaluate(const GlobalOpts& g, const EvaluateArgs& a) {
    const svm::TrainedModel model = svm::load_model(a.model);
    fs::path sidecar = a.dataset_sidecar;
    if (sidecar.empty()) {
        sidecar = a.dataset_csv;
        sidecar.replace_extension(".json");
    }
    const dataset::Dataset ds = dataset::load_dataset(a.dataset_csv, sidecar.string());
    if (!model.feature_names.empty() && model.feature_names != ds.feature_names) {
        throw Error(errc::dimension_mismatch,
                    "model and dataset disagree on the feature schema");
    }
    if (a.split != "all" && a.split != "train" && a.split != "test") {
        throw Error(errc::invalid_argument, "--split must be train, test or all");
    }
    if (a.split != "all" && ds.split_assignment.empty()) {
        throw Error(errc::invalid_argument,
                    "dataset carries no split; evaluate with --split all");
    }

    std::vector<std::vector<double>> x;
    std::vector<int> y;
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        if (a.split == "train" && ds.split_assignment[i] != dataset::Split::train) continue;
        if (a.split == "test" && ds.split_assignment[i] != dataset::Split::test) continue;
        x.push_back(ds.rows[i].features);
        y.push_back(ds.rows[i].label);
    }
    const svm::EvalReport report = svm::evaluate(model, x, y);

    json config;
    config["command"] = "evaluate";
    config["model"] = a.model;
    config["dataset"] = a.dataset_csv;
    config["sidecar"] = sidecar.string();
    config["split"] = a.split;
    config["seed"] = g.seed;

    json doc;
    doc["config"] = config;
    doc["accuracy"] = report.accuracy;
    doc["f1_up"] = report.f1_up;
    doc["f1_down"] = report.f1_down;
    doc["tp"] = report.tp;
    doc["fp"] = report.fp;
    doc["tn"] = report.tn;
    doc["fn"] = report.fn;
    doc["n_test"] = report.n_test;
    write_json_doc(out_path(g, a.out), doc);
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

struct ReportArgs {
    std::vector<std::string> add;  // instrument:scenario=eval.json
};

void cmd_report(const GlobalOpts& g, const ReportArgs& a) {
    struct Cell {
        double accuracy;
        double f1_up;
        double f1_down;
    };
    std::vector<std::string> instruments;
    std::vector<std::string> scenarios;
    std::map<std::pair<std::string, std::string>, Cell> cells;

    for (const std::string& entry : a.add) {
        const auto colon = entry.find(':');
        const auto eq = entry.find('=', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || eq == std::string::npos || colon == 0 ||
            eq <= colon + 1 || eq + 1 == entry.size()) {
            throw Error(errc::invalid_argument,
                        "--add needs instrument:scenario=path, got '" + entry + "'");
        }
        const std::string instrument = entry.substr(0, colon);
        const std::string scenario = entry.substr(colon + 1, eq - colon - 1);
        const std::string path = entry.substr(eq + 1);

        json doc;
        try {
            doc = json::parse(io::read_file(path));
        } catch (const json::exception& e) {
            throw Error(errc::malformed_line, path + ": " + e.what());
        }
        if (!doc.contains("accuracy") || !doc.contains("f1_up") || !doc.contains("f1_down")) {
            throw Error(errc::missing_column, path + ": not an evaluation report");
        }
        if (std::find(instruments.begin(), instruments.end(), instrument) ==
            instruments.end()) {
            instruments.push_back(instrument);
        }
        if (std::find(scenarios.begin(), scenarios.end(), scenario) == scenarios.end()) {
            scenarios.push_back(scenario);
        }
        cells[{instrument, scenario}] = Cell{doc["accuracy"].get<double>(),
                                             doc["f1_up"].get<double>(),
                                             doc["f1_down"].get<double>()};
    }
    if (instruments.empty()) {
        throw Error(errc::invalid_argument, "report needs at least one --add entry");
    }

    json config;
    config["command"] = "report";
    config["add"] = a.add;
    config["seed"] = g.seed;

    std::vector<std::string> columns = {"instrument"};
    for (const auto& scenario : scenarios) {
        columns.push_back(scenario + "_acc");
        columns.push_back(scenario + "_f1_up");
        columns.push_back(scenario + "_f1_down");
    }
    json rows = json::array();
    for (const auto& instrument : instruments) {
        json row;
        row["instrument"] = instrument;
        for (const auto& scenario : scenarios) {
            const auto it = cells.find({instrument, scenario});
            if (it == cells.end()) {
                row[scenario + "_acc"] = nullptr;
                row[scenario + "_f1_up"] = nullptr;
                row[scenario + "_f1_down"] = nullptr;
            } else {
                row[scenario + "_acc"] = it->second.accuracy;
                row[scenario + "_f1_up"] = it->second.f1_up;
                row[scenario + "_f1_down"] = it->second.f1_down;
            }
        }
        rows.push_back(std::move(row));
    }
    write_table(g, "report", columns, rows, config);
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

struct SynthPricesArgs {
    std::string kind = "walk";  // walk | trend
    std::size_t n = 500;
    double drift = 0.0002;
    double vol = 0.01;
    double drift_mag = 0.006;
    std::size_t regime_min = 30;
    std::size_t regime_max = 60;
    std::string start = "2014-01-02";
    double start_price = 100.0;
    std::string out = "prices.csv";
};

void cmd_synth_prices(const GlobalOpts& g, const SynthPricesArgs& a) {
    const Date start = parse_date_arg(a.start);
    ingest::PriceSeries series;
    json config;
    config["command"] = "synth prices";
    config["kind"] = a.kind;
    config["n"] = a.n;
    config["start"] = a.start;
    config["start_price"] = a.start_price;
    config["seed"] = g.seed;
    if (a.kind == "walk") {
        config["drift"] = a.drift;
        config["vol"] = a.vol;
        series = synth::gen_random_walk(a.n, a.drift, a.vol, g.seed, start, a.start_price);
    } else if (a.kind == "trend") {
        config["drift_mag"] = a.drift_mag;
        config["vol"] = a.vol;
        config["regime_min"] = a.regime_min;
        config["regime_max"] = a.regime_max;
        series = synth::gen_trend_regime(a.n, g.seed, a.drift_mag, a.vol, a.regime_min,
                                         a.regime_max, start, a.start_price);
    } else {
        throw Error(errc::invalid_argument, "--kind must be walk or trend");
    }
    const fs::path path = out_path(g, a.out);
    ingest::save_prices(series, path.string(), config.dump());
    announce(path);
}

struct SynthAr1Args {
    std::size_t n = 500;
    double phi = 0.5;
    double sigma = 1.0;
    std::string start = "2014-01-02";
    std::string out = "ar1.csv";
};

void cmd_synth_ar1(const GlobalOpts& g, const SynthAr1Args& a) {
    const DatedSeries s =
        synth::gen_ar1(a.n, a.phi, g.seed, a.sigma, parse_date_arg(a.start));
    json config;
    config["command"] = "synth ar1";
    config["n"] = a.n;
    config["phi"] = a.phi;
    config["sigma"] = a.sigma;
    config["start"] = a.start;
    config["seed"] = g.seed;

    std::string body = "# config: " + config.dump() + "\ndate,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        body += s.dates[i].to_string();
        body += ',';
        body += io::format_double(s.values[i]);
        body += '\n';
    }
    const fs::path path = out_path(g, a.out);
    io::atomic_write(path, body);
    announce(path);
}

struct SynthCausalArgs {
    std::size_t n = 500;
    double a_self = 0.8;
    double b_cross = 0.6;
    double noise = 1.0;
    std::string start = "2014-01-02";
    std::string out = "causal_pair.csv";
};

void cmd_synth_causal(const GlobalOpts& g, const SynthCausalArgs& a) {
    const auto [x, y] =
        synth::gen_causal_pair(a.n, a.a_self, a.b_cross, a.noise, g.seed,
                               parse_date_arg(a.start));
    json config;
    config["command"] = "synth causal-pair";
    config["n"] = a.n;
    config["a_self"] = a.a_self;
    config["b_cross"] = a.b_cross;
    config["noise"] = a.noise;
    config["start"] = a.start;
    config["seed"] = g.seed;

    std::string body = "# config: " + config.dump() + "\ndate,x,y\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        body += x.dates[i].to_string();
        body += ',';
        body += io::format_double(x.values[i]);
        body += ',';
        body += io::format_double(y.values[i]);
        body += '\n';
    }
    const fs::path path = out_path(g, a.out);
    io::atomic_write(path, body);
    announce(path);
}

struct SynthCorpusArgs {
    std::size_t days = 100;
    std::string start = "2014-01-02";
    std::string calendar = "daily";  // daily | business
    double past_fraction = 0.2;
    std::string ticker;
    std::string out_corpus = "corpus.jsonl";
    std::string out_planted = "planted.csv";
    std::string out_past = "past_days.csv";
};

void cmd_synth_corpus(const GlobalOpts& g, const SynthCorpusArgs& a) {
    const Date start = parse_date_arg(a.start);
    std::vector<Date> calendar;
    if (a.calendar == "daily") {
        calendar = synth::daily_calendar(start, a.days);
    } else if (a.calendar == "business") {
        calendar = synth::business_calendar(start, a.days);
    } else {
        throw Error(errc::invalid_argument, "--calendar must be daily or business");
    }

    const synth::SignalPlan plan = synth::gen_signal_targets(calendar, g.seed,
                                                             a.past_fraction);
    const auto docs =
        synth::gen_corpus(calendar, plan.signals, plan.past_days, g.seed, a.ticker);

    json config;
    config["command"] = "synth corpus";
    config["days"] = a.days;
    config["start"] = a.start;
    config["calendar"] = a.calendar;
    config["past_fraction"] = a.past_fraction;
    config["ticker"] = a.ticker;
    config["seed"] = g.seed;

    const fs::path corpus_path = out_path(g, a.out_corpus);
    ingest::save_documents(docs, corpus_path.string());
    announce(corpus_path);

    const fs::path planted_path = out_path(g, a.out_planted);
    sentiment::save_signals(plan.signals, planted_path.string(), config.dump());
    announce(planted_path);

    std::set<std::int32_t> past;
    for (const Date& d : plan.past_days) past.insert(d.serial());
    std::string body = "# config: " + config.dump() + "\ndate,past\n";
    for (const Date& d : calendar) {
        body += d.to_string();
        body += past.count(d.serial()) ? ",1\n" : ",0\n";
    }
    const fs::path past_path = out_path(g, a.out_past);
    io::atomic_write(past_path, body);
    announce(past_path);
}

struct SynthLexiconArgs {
    std::string out_attitude = "attitude_lexicon.tsv";
    std::string out_emotion = "emotion_lexicon.tsv";
};

void cmd_synth_lexicons(const GlobalOpts& g, const SynthLexiconArgs& a) {
    const fs::path attitude_path = out_path(g, a.out_attitude);
    const fs::path emotion_path = out_path(g, a.out_emotion);
    synth::save_fixture_lexicons(attitude_path.string(), emotion_path.string());
    announce(attitude_path);
    announce(emotion_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sentimarket: sentiment and technical market analysis toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "global random seed")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", g.format, "table output format")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->capture_default_str();

    StationarityArgs st;
    auto* c_st = app.add_subcommand("stationarity", "ADF, Ljung-Box, ACF and PACF");
    c_st->add_option("--input", st.input, "dated CSV")->required();
    c_st->add_option("--column", st.column, "value column (default: auto)");
    c_st->add_option("--transform", st.transform, "levels | pct")
        ->check(CLI::IsMember({"levels", "pct"}));
    c_st->add_option("--diff", st.diff, "difference order applied before testing");
    c_st->add_option("--adf-lag", st.adf_lag, "max lagged differences in the ADF regression");
    c_st->add_option("--acf-lags", st.acf_lags, "ACF/PACF lags");
    c_st->add_option("--lb-lags", st.lb_lags, "Ljung-Box lags");

    CcfArgs cc;
    auto* c_cc = app.add_subcommand("ccf", "cross-correlation with confidence bounds");
    c_cc->add_option("--x", cc.x_path, "dated CSV for the leading series")->required();
    c_cc->add_option("--x-column", cc.x_column, "column in --x");
    c_cc->add_option("--y", cc.y_path, "dated CSV for the response series")->required();
    c_cc->add_option("--y-column", cc.y_column, "column in --y");
    c_cc->add_option("--max-lag", cc.max_lag, "maximum |lag|");
    c_cc->add_option("--transform", cc.transform, "levels | pct (applied to --y)")
        ->check(CLI::IsMember({"levels", "pct"}));

    GrangerArgs gr;
    auto* c_gr = app.add_subcommand("granger", "signal vs price causality table");
    c_gr->add_option("--prices", gr.prices, "price CSV")->required();
    c_gr->add_option("--price-column", gr.price_column, "price column (default: auto)");
    c_gr->add_option("--signals", gr.signals, "mode=path signal CSV (repeatable)")
        ->required();
    c_gr->add_option("--columns", gr.columns, "attitude | emotions | all")
        ->check(CLI::IsMember({"attitude", "emotions", "all"}));
    c_gr->add_option("--lags", gr.lags, "comma-separated lag list");
    c_gr->add_option("--threshold", gr.threshold, "significance threshold")
        ->capture_default_str();
    c_gr->add_option("--transform", gr.transform, "levels | pct (applied to prices)")
        ->check(CLI::IsMember({"levels", "pct"}));

    auto* c_sent = app.add_subcommand("sentiment", "sentiment pipeline");
    c_sent->require_subcommand(1);
    ExtractArgs ex;
    auto* c_ex = c_sent->add_subcommand("extract", "corpus -> daily signal CSV");
    c_ex->add_option("--corpus", ex.corpus, "JSONL corpus")->required();
    c_ex->add_option("--attitude-lexicon", ex.attitude_lexicon, "attitude TSV")->required();
    c_ex->add_option("--emotion-lexicon", ex.emotion_lexicon, "emotion TSV")->required();
    c_ex->add_option("--mode", ex.mode, "standard | temporal")
        ->check(CLI::IsMember({"standard", "temporal"}));
    c_ex->add_option("--ticker", ex.ticker, "keep only documents tagged with this ticker");
    c_ex->add_option("--calendar", ex.calendar, "daily | docs")
        ->check(CLI::IsMember({"daily", "docs"}));
    c_ex->add_option("--out", ex.out, "output file name");

    auto* c_feat = app.add_subcommand("features", "feature pipeline");
    c_feat->require_subcommand(1);
    FeaturesArgs fe;
    auto* c_fe = c_feat->add_subcommand("build", "prices -> indicator matrix CSV");
    c_fe->add_option("--prices", fe.prices, "price CSV")->required();
    c_fe->add_option("--out", fe.out, "output file name");

    TrainArgs tr;
    auto* c_tr = app.add_subcommand("train", "grid-search and fit the trend classifier");
    c_tr->add_option("--features", tr.features, "features CSV (features build output)")
        ->required();
    c_tr->add_option("--prices", tr.prices, "price CSV for labels")->required();
    c_tr->add_option("--signals", tr.signals, "daily signal CSV (sentiment scenarios)");
    c_tr->add_option("--scenario", tr.scenario,
                     "baseline | all+attitude+emotion | all+emotion | filtering+emotion");
    c_tr->add_option("--horizon", tr.horizon, "label horizon in trading days")
        ->capture_default_str();
    c_tr->add_option("--train-fraction", tr.train_fraction, "training share")
        ->capture_default_str();
    c_tr->add_option("--scope", tr.scope, "normalization scope: train | all")
        ->check(CLI::IsMember({"train", "all"}));
    c_tr->add_option("--folds", tr.folds, "cross-validation folds")->capture_default_str();
    c_tr->add_option("--c-grid", tr.c_grid, "comma-separated C grid");
    c_tr->add_option("--gamma-grid", tr.gamma_grid, "comma-separated gamma grid");
    c_tr->add_option("--tol", tr.tol, "KKT tolerance")->capture_default_str();
    c_tr->add_option("--max-passes", tr.max_passes, "SMO clean sweeps before stopping")
        ->capture_default_str();
    c_tr->add_option("--model-out", tr.model_out, "model file name");
    c_tr->add_option("--dataset-out", tr.dataset_out, "dataset file name");

    EvaluateArgs ev;
    auto* c_ev = app.add_subcommand("evaluate", "score a model on a persisted dataset");
    c_ev->add_option("--model", ev.model, "model JSON")->required();
    c_ev->add_option("--dataset", ev.dataset_csv, "dataset CSV")->required();
    c_ev->add_option("--sidecar", ev.dataset_sidecar, "dataset sidecar JSON");
    c_ev->add_option("--split", ev.split, "test | train | all")
        ->check(CLI::IsMember({"test", "train", "all"}));
    c_ev->add_option("--out", ev.out, "output file name");

    ReportArgs re;
    auto* c_re = app.add_subcommand("report", "merge evaluations into one table");
    c_re->add_option("--add", re.add, "instrument:scenario=eval.json (repeatable)")
        ->required();

    auto* c_sy = app.add_subcommand("synth", "seeded fixture generators");
    c_sy->require_subcommand(1);

    SynthPricesArgs sp;
    auto* c_sp = c_sy->add_subcommand("prices", "price series fixtures");
    c_sp->add_option("--kind", sp.kind, "walk | trend")
        ->check(CLI::IsMember({"walk", "trend"}));
    c_sp->add_option("--n", sp.n, "bars")->capture_default_str();
    c_sp->add_option("--drift", sp.drift, "per-bar log drift (walk)")->capture_default_str();
    c_sp->add_option("--vol", sp.vol, "per-bar log volatility")->capture_default_str();
    c_sp->add_option("--drift-mag", sp.drift_mag, "regime drift magnitude (trend)")
        ->capture_default_str();
    c_sp->add_option("--regime-min", sp.regime_min, "shortest regime (trend)")
        ->capture_default_str();
    c_sp->add_option("--regime-max", sp.regime_max, "longest regime (trend)")
        ->capture_default_str();
    c_sp->add_option("--start", sp.start, "first date")->capture_default_str();
    c_sp->add_option("--start-price", sp.start_price, "initial close")
        ->capture_default_str();
    c_sp->add_option("--out", sp.out, "output file name");

    SynthAr1Args sa;
    auto* c_sa = c_sy->add_subcommand("ar1", "AR(1) series fixture");
    c_sa->add_option("--n", sa.n, "observations")->capture_default_str();
    c_sa->add_option("--phi", sa.phi, "AR coefficient")->capture_default_str();
    c_sa->add_option("--sigma", sa.sigma, "innovation scale")->capture_default_str();
    c_sa->add_option("--start", sa.start, "first date")->capture_default_str();
    c_sa->add_option("--out", sa.out, "output file name");

    SynthCausalArgs sc;
    auto* c_sc = c_sy->add_subcommand("causal-pair", "VAR pair with known direction");
    c_sc->add_option("--n", sc.n, "observations")->capture_default_str();
    c_sc->add_option("--a-self", sc.a_self, "AR coefficient of both series")
        ->capture_default_str();
    c_sc->add_option("--b-cross", sc.b_cross, "x -> y cross coefficient")
        ->capture_default_str();
    c_sc->add_option("--noise", sc.noise, "innovation scale")->capture_default_str();
    c_sc->add_option("--start", sc.start, "first date")->capture_default_str();
    c_sc->add_option("--out", sc.out, "output file name");

    SynthCorpusArgs so;
    auto* c_so = c_sy->add_subcommand("corpus", "corpus with planted daily sentiment");
    c_so->add_option("--days", so.days, "calendar days")->capture_default_str();
    c_so->add_option("--start", so.start, "first date")->capture_default_str();
    c_so->add_option("--calendar", so.calendar, "daily | business")
        ->check(CLI::IsMember({"daily", "business"}));
    c_so->add_option("--past-fraction", so.past_fraction, "share of past-tense days")
        ->capture_default_str();
    c_so->add_option("--ticker", so.ticker, "tag documents with this ticker");
    c_so->add_option("--out-corpus", so.out_corpus, "corpus file name");
    c_so->add_option("--out-planted", so.out_planted, "planted signal file name");
    c_so->add_option("--out-past", so.out_past, "past-day flag file name");

    SynthLexiconArgs sl;
    auto* c_sl = c_sy->add_subcommand("lexicons", "fixture lexicons");
    c_sl->add_option("--out-attitude", sl.out_attitude, "attitude lexicon file name");
    c_sl->add_option("--out-emotion", sl.out_emotion, "emotion lexicon file name");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_st) cmd_stationarity(g, st);
        if (*c_cc) cmd_ccf(g, cc);
        if (*c_gr) cmd_granger(g, gr);
        if (*c_ex) cmd_sentiment_extract(g, ex);
        if (*c_fe) cmd_features_build(g, fe);
        if (*c_tr) cmd_train(g, tr);
        if (*c_ev) cmd_evaluate(g, ev);
        if (*c_re) cmd_report(g, re);
        if (*c_sp) cmd_synth_prices(g, sp);
        if (*c_sa) cmd_synth_ar1(g, sa);
        if (*c_sc) cmd_synth_causal(g, sc);
        if (*c_so) cmd_synth_corpus(g, so);
        if (*c_sl) cmd_synth_lexicons(g, sl);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
