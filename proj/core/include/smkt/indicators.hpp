#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smkt/dates.hpp"
#include "smkt/ingest.hpp"

namespace smkt::indicators {

/// The fifteen feature columns, in canonical order.
inline constexpr std::array<std::string_view, 15> kFeatureNames = {
    "ma50", "ma100", "ma200", "willr10", "mom1",    "mom5", "rsi14", "macd",
    "macd_signal", "macd_hist", "bb_pctb", "cci", "adx",  "tema",  "atr"};

/// Periods for every indicator. The defaults produce the canonical fifteen
/// columns; any of them can be overridden.
struct IndicatorConfig {
    std::size_t sma_short = 50;
    std::size_t sma_mid = 100;
    std::size_t sma_long = 200;
    std::size_t willr_period = 10;
    std::size_t mom_short = 1;
    std::size_t mom_long = 5;
    std::size_t rsi_period = 14;
    std::size_t macd_fast = 12;
    std::size_t macd_slow = 26;
    std::size_t macd_signal = 9;
    std::size_t boll_window = 20;
    double boll_k = 2.0;
    std::size_t cci_period = 20;
    std::size_t adx_period = 14;
    std::size_t tema_period = 30;
    std::size_t atr_period = 14;

    /// Longest lookback among all periods; rows with fewer prior bars are
    /// flagged invalid by build_indicator_matrix (200 with defaults).
    std::size_t max_window() const;
};

/// All per-indicator functions return a series of the input length with NaN
/// on warm-up rows, and throw Error(too_short) when the input cannot yield
/// a single defined value.

/// Arithmetic mean over a trailing window.
std::vector<double> sma(std::span<const double> values, std::size_t window);

/// Exponential moving average, alpha = 2/(period+1), seeded with the SMA of
/// the first `period` defined values. A NaN warm-up prefix in the input is
/// skipped, so EMAs chain (see tema).
std::vector<double> ema(std::span<const double> values, std::size_t period);

/// Wilder moving average, alpha = 1/period, seeded like ema.
std::vector<double> wilder(std::span<const double> values, std::size_t period);

/// %R = -100 * (HH - close) / (HH - LL) over the trailing period;
/// flat window (HH == LL) yields -50.
std::vector<double> williams_r(std::span<const double> high, std::span<const double> low,
                               std::span<const double> close, std::size_t period = 10);

/// close_t - close_{t-n}.
std::vector<double> momentum(std::span<const double> close, std::size_t n);

/// Wilder-smoothed relative strength index in [0, 100]. Zero average loss
/// yields 100; an all-flat window (zero gain and loss) yields 50.
std::vector<double> rsi(std::span<const double> close, std::size_t period = 14);

struct MacdResult {
    std::vector<double> macd;
    std::vector<double> signal;
    std::vector<double> histogram;
};

/// EMA(fast) - EMA(slow), its EMA(signal_period) signal line, and their
/// difference.
MacdResult macd(std::span<const double> close, std::size_t fast = 12, std::size_t slow = 26,
                std::size_t signal_period = 9);

/// %B = (close - (SMA - k sigma)) / (2 k sigma) with population sigma over
/// the window; sigma == 0 yields 0.5.
std::vector<double> bollinger_pctb(std::span<const double> close, std::size_t window = 20,
                                   double k = 2.0);

/// Commodity channel index with mean-absolute-deviation scale 0.015;
/// zero deviation yields 0.
std::vector<double> cci(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period = 20);

/// Average directional index in [0, 100] from Wilder-smoothed +DM/-DM/TR;
/// degenerate (flat) stretches yield 0.
std::vector<double> adx(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period = 14);

/// Triple EMA: 3 EMA1 - 3 EMA2 + EMA3, all with the same period.
std::vector<double> tema(std::span<const double> close, std::size_t period = 30);

/// Wilder-smoothed average true range,
/// TR = max(H - L, |H - prev close|, |L - prev close|).
std::vector<double> atr(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period = 14);

/// The fifteen columns evaluated on one price series. Indicators run on the
/// adjusted close, with high/low rescaled onto the adjusted scale.
struct IndicatorMatrix {
    std::vector<Date> dates;
    std::vector<std::string> columns;        // == kFeatureNames
    std::vector<std::vector<double>> rows;   // one row of 15 values per date
    std::vector<std::uint8_t> valid;         // 1 where the row is usable

    std::size_t valid_count() const;
};

/// Requires max_window() + 1 bars or more (201 with defaults). A row is
/// valid when it has max_window() prior bars and every column is finite.
IndicatorMatrix build_indicator_matrix(const ingest::PriceSeries& prices,
                                       const IndicatorConfig& config = {});

}  // namespace smkt::indicators
