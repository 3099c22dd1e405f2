#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smkt/dates.hpp"
#include "smkt/indicators.hpp"
#include "smkt/ingest.hpp"
#include "smkt/sentiment.hpp"

namespace smkt::dataset {

/// The four feature scenarios: technical indicators only (15 columns),
/// indicators + attitude + emotions (24), indicators + emotions (23), and
/// the same 23 columns built from a cashtag-filtered corpus upstream.
enum class Scenario { baseline, all_attitude_emotion, all_emotion, filtering_emotion };

/// Accepts "baseline", "all+attitude+emotion", "all+emotion",
/// "filtering+emotion".
Scenario parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);
std::size_t scenario_feature_count(Scenario s);
bool scenario_uses_signals(Scenario s);

enum class Split : std::uint8_t { train, test };

enum class NormScope { train, all };

NormScope parse_scope(std::string_view name);  // "train" | "all"
std::string_view scope_name(NormScope scope);

struct Row {
    Date date;
    std::vector<double> features;
    int label = 0;  // +1 or -1
};

/// Per-feature standardization parameters. sd == 0 marks a zero-variance
/// column whose values were replaced by zeros.
struct NormStats {
    std::vector<double> mean;
    std::vector<double> sd;

    bool empty() const { return mean.empty(); }
};

struct Dataset {
    std::vector<std::string> feature_names;
    std::vector<Row> rows;
    std::vector<Split> split_assignment;  // empty until split() is applied
    NormStats stats;                      // empty until normalize() is applied

    // Provenance echoed into the sidecar so a run can be reproduced.
    std::string scenario;
    int horizon = 0;
    std::uint64_t seed = 0;
    double train_fraction = 0.0;
    std::string norm_scope;

    std::size_t train_count() const;
};

/// label_t = +1 when adj_close_{t+n} > adj_close_t, else -1 (ties are -1).
/// The last n dates carry no label and are dropped.
std::vector<std::pair<Date, int>> label_horizon(const ingest::PriceSeries& prices,
                                                std::size_t n);

/// Joins valid indicator rows with labels on date; non-baseline scenarios
/// append the sentiment columns, zero-filled on days the signal series does
/// not cover. `signals` may be null for the baseline scenario only.
Dataset assemble(const indicators::IndicatorMatrix& matrix,
                 const std::vector<sentiment::DailySignal>* signals, Scenario scenario,
                 const std::vector<std::pair<Date, int>>& labels);

/// Seeded uniform random assignment of round(n * train_fraction) rows to
/// the training set. Requires at least 10 rows.
void split(Dataset& ds, double train_fraction, std::uint64_t seed);

/// Standardizes every feature to zero mean and unit (sample) variance.
/// scope train fits the stats on training rows and applies them everywhere;
/// scope all fits on every row. Zero-variance columns become all zeros and
/// their names are returned as warnings.
std::vector<std::string> normalize(Dataset& ds, NormScope scope);

/// CSV (date, features..., label, split) plus a JSON sidecar holding the
/// feature names, config, and normalization stats.
void save_dataset(const Dataset& ds, const std::string& csv_path,
                  const std::string& sidecar_path);
Dataset load_dataset(const std::string& csv_path, const std::string& sidecar_path);

}  // namespace smkt::dataset
