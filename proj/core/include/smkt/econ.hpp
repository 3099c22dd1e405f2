#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smkt/series.hpp"

namespace smkt::econ {

/// Sample autocorrelation at lags 1..max_lag:
///   rho_k = sum_t (v_t - mean)(v_{t+k} - mean) / sum_t (v_t - mean)^2
std::vector<double> acf(std::span<const double> v, std::size_t max_lag);

/// Partial autocorrelation at lags 1..max_lag via the Durbin-Levinson
/// recursion on the sample ACF. pacf(1) equals acf(1) exactly.
std::vector<double> pacf(std::span<const double> v, std::size_t max_lag);

struct LjungBoxResult {
    double q;        // portmanteau statistic
    double p_value;  // upper tail of chi-squared with `lags` dof
};

/// Ljung-Box test for joint autocorrelation up to `lags`:
///   Q = n (n + 2) sum_{k=1..h} rho_k^2 / (n - k)
LjungBoxResult ljung_box(std::span<const double> v, std::size_t lags);

struct AdfResult {
    double t_stat;      // t statistic of the lagged-level coefficient
    double gamma;       // the coefficient itself
    int lag_order;      // number of lagged difference terms included
    bool reject_1pct;   // t < -3.43
    bool reject_5pct;   // t < -2.86
    bool reject_10pct;  // t < -2.57
};

/// Augmented Dickey-Fuller unit-root test, constant-only specification:
///   dv_t = alpha + gamma v_{t-1} + sum_{i=1..L} delta_i dv_{t-i} + e_t
/// Rejection (stationarity) is decided against the MacKinnon asymptotic
/// critical values for the constant case.
AdfResult adf_test(std::span<const double> v, int max_lag = 1);

struct CcfReport {
    std::vector<int> lags;              // -max_lag .. +max_lag
    std::vector<double> correlations;   // corr(x_t, y_{t+k}) per lag k
    double conf_bound;                  // 1.96 / sqrt(n)
};

/// Cross-correlation between two pre-aligned series. Each lag uses the full
/// overlap window and its own Pearson normalization, so every value lies in
/// [-1, 1]. ccf(x, y) at lag k equals ccf(y, x) at lag -k.
CcfReport ccf(const DatedSeries& x, const DatedSeries& y, std::size_t max_lag);

struct OlsFit {
    std::vector<double> coef;
    double rss = 0.0;
    std::vector<double> residuals;
    std::vector<double> std_errors;  // per coefficient
};

/// Ordinary least squares for y ~ X, solved through the normal equations
/// with a Cholesky factorization. X is given as rows; must have more rows
/// than columns and full column rank.
OlsFit ols(const std::vector<std::vector<double>>& X, std::span<const double> y);

enum class Direction { x_to_y, y_to_x };

std::string direction_label(Direction d);

struct GrangerResult {
    Direction direction = Direction::x_to_y;
    int lag = 1;
    double f_stat = 0.0;
    double p_value = 1.0;
    std::size_t n_obs = 0;  // regression sample count
    bool significant = false;
    bool exact_fit = false;  // unrestricted model had zero residual sum of squares
};

/// Tests whether lagged x improves the prediction of y beyond y's own lags.
/// Restricted model: y_t ~ const + y_{t-1..t-p}. Unrestricted adds
/// x_{t-1..t-p}. F = ((RSS_r - RSS_u)/p) / (RSS_u/(n_obs - 2p - 1)) with
/// n_obs regression rows; significant iff p_value < threshold.
GrangerResult granger_test(const DatedSeries& x, const DatedSeries& y, int lag,
                           double threshold = 0.10);

struct StationarityReport {
    AdfResult adf;
    LjungBoxResult ljung_box;
    std::vector<double> acf;
    std::vector<double> pacf;
    double conf_bound = 0.0;  // white-noise band 1.96/sqrt(n) for the ACF bars
    std::size_t n = 0;
};

StationarityReport stationarity_report(const DatedSeries& s, std::size_t acf_lags,
                                       std::size_t ljung_box_lags, int adf_lag);

}  // namespace smkt::econ
