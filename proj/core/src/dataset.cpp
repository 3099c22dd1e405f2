#include "smkt/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"
#include "smkt/rng.hpp"

namespace smkt::dataset {

Scenario parse_scenario(std::string_view name) {
    if (name == "baseline") return Scenario::baseline;
    if (name == "all+attitude+emotion") return Scenario::all_attitude_emotion;
    if (name == "all+emotion") return Scenario::all_emotion;
    if (name == "filtering+emotion") return Scenario::filtering_emotion;
    throw Error(errc::invalid_argument, "unknown scenario '" + std::string(name) + "'");
}

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::baseline: return "baseline";
        case Scenario::all_attitude_emotion: return "all+attitude+emotion";
        case Scenario::all_emotion: return "all+emotion";
        case Scenario::filtering_emotion: return "filtering+emotion";
    }
    return "baseline";
}

std::size_t scenario_feature_count(Scenario s) {
    switch (s) {
        case Scenario::baseline: return 15;
        case Scenario::all_attitude_emotion: return 24;
        case Scenario::all_emotion:
        case Scenario::filtering_emotion: return 23;
    }
    return 15;
}

bool scenario_uses_signals(Scenario s) { return s != Scenario::baseline; }

NormScope parse_scope(std::string_view name) {
    if (name == "train") return NormScope::train;
    if (name == "all") return NormScope::all;
    throw Error(errc::invalid_argument,
                "normalization scope must be 'train' or 'all', got '" + std::string(name) +
                    "'");
}

std::string_view scope_name(NormScope scope) {
    return scope == NormScope::train ? "train" : "all";
}

std::size_t Dataset::train_count() const {
    return static_cast<std::size_t>(
        std::count(split_assignment.begin(), split_assignment.end(), Split::train));
}

std::vector<std::pair<Date, int>> label_horizon(const ingest::PriceSeries& prices,
                                                std::size_t n) {
    if (n == 0) throw Error(errc::invalid_argument, "horizon must be positive");
    if (prices.size() <= n) {
        throw Error(errc::too_short, "horizon " + std::to_string(n) + " needs more than " +
                                         std::to_string(n) + " bars, got " +
                                         std::to_string(prices.size()));
    }
    std::vector<std::pair<Date, int>> labels;
    labels.reserve(prices.size() - n);
    for (std::size_t t = 0; t + n < prices.size(); ++t) {
        const bool up = prices.bars[t + n].adj_close > prices.bars[t].adj_close;
        labels.emplace_back(prices.bars[t].date, up ? +1 : -1);
    }
    return labels;
}

Dataset assemble(const indicators::IndicatorMatrix& matrix,
                 const std::vector<sentiment::DailySignal>* signals, Scenario scenario,
                 const std::vector<std::pair<Date, int>>& labels) {
    if (scenario_uses_signals(scenario) && signals == nullptr) {
        throw Error(errc::missing_signals,
                    std::string("scenario ") + std::string(scenario_name(scenario)) +
                        " requires a daily-signal series");
    }

    std::unordered_map<std::int32_t, int> label_by_date;
    for (const auto& [date, label] : labels) label_by_date[date.serial()] = label;

    std::unordered_map<std::int32_t, const sentiment::DailySignal*> signal_by_date;
    if (signals != nullptr) {
        for (const auto& s : *signals) signal_by_date[s.date.serial()] = &s;
    }

    Dataset ds;
    ds.scenario = scenario_name(scenario);
    ds.feature_names.assign(matrix.columns.begin(), matrix.columns.end());
    if (scenario == Scenario::all_attitude_emotion) ds.feature_names.emplace_back("attitude");
    if (scenario_uses_signals(scenario)) {
        for (const auto& emo : ingest::kEmotions) ds.feature_names.emplace_back(emo);
    }

    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        if (matrix.valid[i] == 0) continue;
        const auto label_it = label_by_date.find(matrix.dates[i].serial());
        if (label_it == label_by_date.end()) continue;
        Row row;
        row.date = matrix.dates[i];
        row.label = label_it->second;
        row.features = matrix.rows[i];
        if (scenario_uses_signals(scenario)) {
            const auto sig_it = signal_by_date.find(matrix.dates[i].serial());
            const sentiment::DailySignal* sig =
                sig_it == signal_by_date.end() ? nullptr : sig_it->second;
            if (scenario == Scenario::all_attitude_emotion) {
                row.features.push_back(sig != nullptr ? sig->attitude : 0.0);
            }
            for (std::size_t k = 0; k < 8; ++k) {
                row.features.push_back(sig != nullptr ? sig->emotions[k] : 0.0);
            }
        }
        ds.rows.push_back(std::move(row));
    }

    if (ds.rows.empty()) {
        throw Error(errc::no_overlapping_dates,
                    "no valid indicator row carries a label");
    }
    return ds;
}

void split(Dataset& ds, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw Error(errc::invalid_argument, "train fraction must lie in (0, 1)");
    }
    const std::size_t n = ds.rows.size();
    if (n < 10) {
        throw Error(errc::too_few_rows,
                    "split needs at least 10 rows, got " + std::to_string(n));
    }
    std::size_t n_train = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * train_fraction));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(order);

    ds.split_assignment.assign(n, Split::test);
    for (std::size_t k = 0; k < n_train; ++k) ds.split_assignment[order[k]] = Split::train;
    ds.seed = seed;
    ds.train_fraction = train_fraction;
}

std::vector<std::string> normalize(Dataset& ds, NormScope scope) {
    const std::size_t n_features = ds.feature_names.size();
    if (scope == NormScope::train && ds.split_assignment.size() != ds.rows.size()) {
        throw Error(errc::invalid_argument, "scope=train requires a split assignment");
    }

    const auto fit_on = [&](std::size_t r) {
        return scope == NormScope::all || ds.split_assignment[r] == Split::train;
    };

    NormStats stats;
    stats.mean.assign(n_features, 0.0);
    stats.sd.assign(n_features, 0.0);
    std::vector<std::string> warnings;

    for (std::size_t c = 0; c < n_features; ++c) {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t r = 0; r < ds.rows.size(); ++r) {
            if (!fit_on(r)) continue;
            sum += ds.rows[r].features[c];
            ++count;
        }
        const double mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
        double ss = 0.0;
        for (std::size_t r = 0; r < ds.rows.size(); ++r) {
            if (!fit_on(r)) continue;
            const double d = ds.rows[r].features[c] - mean;
            ss += d * d;
        }
        double sd = count > 1 ? std::sqrt(ss / static_cast<double>(count - 1)) : 0.0;
        if (!std::isfinite(sd) || sd <= 0.0) {
            sd = 0.0;
            warnings.push_back(ds.feature_names[c]);
        }
        stats.mean[c] = mean;
        stats.sd[c] = sd;
        for (auto& row : ds.rows) {
            row.features[c] = sd > 0.0 ? (row.features[c] - mean) / sd : 0.0;
        }
    }

    ds.stats = std::move(stats);
    ds.norm_scope = scope_name(scope);
    return warnings;
}

void save_dataset(const Dataset& ds, const std::string& csv_path,
                  const std::string& sidecar_path) {
    nlohmann::json sidecar;
    sidecar["kind"] = "dataset";
    sidecar["feature_names"] = ds.feature_names;
    sidecar["scenario"] = ds.scenario;
    sidecar["horizon"] = ds.horizon;
    sidecar["seed"] = ds.seed;
    sidecar["train_fraction"] = ds.train_fraction;
    nlohmann::json norm;
    norm["scope"] = ds.norm_scope.empty() ? "none" : ds.norm_scope;
    norm["mean"] = ds.stats.mean;
    norm["sd"] = ds.stats.sd;
    sidecar["normalization"] = norm;
    io::atomic_write(sidecar_path, sidecar.dump(2) + "\n");

    std::string out = "# config: " + sidecar.dump() + "\n";
    out += "date";
    for (const auto& name : ds.feature_names) {
        out += ',';
        out += name;
    }
    out += ",label,split\n";
    for (std::size_t r = 0; r < ds.rows.size(); ++r) {
        out += ds.rows[r].date.to_string();
        for (double v : ds.rows[r].features) {
            out += ',';
            out += io::format_double(v);
        }
        out += ',';
        out += ds.rows[r].label > 0 ? "1" : "-1";
        out += ',';
        if (ds.split_assignment.empty()) {
            out += "none";
        } else {
            out += ds.split_assignment[r] == Split::train ? "train" : "test";
        }
        out += '\n';
    }
    io::atomic_write(csv_path, out);
}

Dataset load_dataset(const std::string& csv_path, const std::string& sidecar_path) {
    Dataset ds;
    const nlohmann::json sidecar = nlohmann::json::parse(io::read_file(sidecar_path));
    ds.feature_names = sidecar.at("feature_names").get<std::vector<std::string>>();
    ds.scenario = sidecar.at("scenario").get<std::string>();
    ds.horizon = sidecar.at("horizon").get<int>();
    ds.seed = sidecar.at("seed").get<std::uint64_t>();
    ds.train_fraction = sidecar.at("train_fraction").get<double>();
    const auto& norm = sidecar.at("normalization");
    const auto scope = norm.at("scope").get<std::string>();
    ds.norm_scope = scope == "none" ? "" : scope;
    ds.stats.mean = norm.at("mean").get<std::vector<double>>();
    ds.stats.sd = norm.at("sd").get<std::vector<double>>();

    const std::string text = io::read_file(csv_path);
    std::vector<std::string> header;
    bool have_header = false;
    bool any_split = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string line = nl == std::string::npos ? text.substr(pos)
                                                   : text.substr(pos, nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.starts_with('#')) continue;
        const auto cells = io::split_csv_line(line);
        if (!have_header) {
            header.assign(cells.begin(), cells.end());
            const std::size_t want = ds.feature_names.size() + 3;
            if (header.size() != want || header.front() != "date" ||
                header[header.size() - 2] != "label" || header.back() != "split") {
                throw Error(errc::missing_column,
                            csv_path + ": header does not match the sidecar schema");
            }
            for (std::size_t c = 0; c < ds.feature_names.size(); ++c) {
                if (header[c + 1] != ds.feature_names[c]) {
                    throw Error(errc::missing_column, csv_path + ": feature column '" +
                                                          header[c + 1] +
                                                          "' does not match sidecar");
                }
            }
            have_header = true;
            continue;
        }
        if (cells.size() != header.size()) {
            throw Error(errc::malformed_line,
                        csv_path + " line " + std::to_string(line_no) + ": cell count");
        }
        Row row;
        const auto date = Date::parse(io::trim(cells[0]));
        if (!date) {
            throw Error(errc::malformed_line,
                        csv_path + " line " + std::to_string(line_no) + ": bad date");
        }
        row.date = *date;
        row.features.resize(ds.feature_names.size());
        for (std::size_t c = 0; c < ds.feature_names.size(); ++c) {
            if (!io::parse_double(cells[c + 1], row.features[c])) {
                throw Error(errc::malformed_number,
                            csv_path + " line " + std::to_string(line_no) + ": '" +
                                cells[c + 1] + "'");
            }
        }
        const std::string_view label = io::trim(cells[cells.size() - 2]);
        if (label == "1" || label == "+1") {
            row.label = +1;
        } else if (label == "-1") {
            row.label = -1;
        } else {
            throw Error(errc::malformed_line, csv_path + " line " + std::to_string(line_no) +
                                                  ": label must be 1 or -1");
        }
        const std::string_view split_cell = io::trim(cells.back());
        if (split_cell == "train") {
            ds.split_assignment.push_back(Split::train);
            any_split = true;
        } else if (split_cell == "test") {
            ds.split_assignment.push_back(Split::test);
            any_split = true;
        } else if (split_cell == "none") {
            ds.split_assignment.push_back(Split::test);
        } else {
            throw Error(errc::malformed_line, csv_path + " line " + std::to_string(line_no) +
                                                  ": split must be train/test/none");
        }
        ds.rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw Error(errc::missing_column, csv_path + ": no header row");
    }
    if (!any_split) ds.split_assignment.clear();
    return ds;
}

}  // namespace smkt::dataset
