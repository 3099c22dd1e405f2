#include "smkt/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smkt/errors.hpp"

namespace smkt::indicators {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_period(std::size_t period) {
    if (period == 0) throw Error(errc::invalid_argument, "period must be positive");
}

void require_length(std::size_t have, std::size_t need, std::string_view what) {
    if (have < need) {
        throw Error(errc::too_short, std::string(what) + " needs " + std::to_string(need) +
                                         " values, got " + std::to_string(have));
    }
}

void require_bars(std::span<const double> high, std::span<const double> low,
                  std::span<const double> close) {
    if (high.size() != close.size() || low.size() != close.size()) {
        throw Error(errc::invalid_argument, "high/low/close lengths differ");
    }
}

/// First index holding a finite value; values before it must be a warm-up
/// prefix (all defined values are contiguous from there on).
std::size_t first_defined(std::span<const double> v) {
    std::size_t i = 0;
    while (i < v.size() && !std::isfinite(v[i])) ++i;
    return i;
}

/// Shared EMA/Wilder recursion: seed with the mean of the first `period`
/// defined values, then out[i] = alpha * x[i] + (1 - alpha) * out[i-1].
std::vector<double> smooth(std::span<const double> v, std::size_t period, double alpha,
                           std::string_view what) {
    require_period(period);
    const std::size_t start = first_defined(v);
    require_length(v.size() - start, period, what);
    std::vector<double> out(v.size(), kNaN);
    double seed = 0.0;
    for (std::size_t i = start; i < start + period; ++i) seed += v[i];
    out[start + period - 1] = seed / static_cast<double>(period);
    for (std::size_t i = start + period; i < v.size(); ++i) {
        out[i] = alpha * v[i] + (1.0 - alpha) * out[i - 1];
    }
    return out;
}

}  // namespace

std::size_t IndicatorConfig::max_window() const {
    return std::max({sma_short, sma_mid, sma_long, willr_period, mom_short, mom_long,
                     rsi_period, macd_fast, macd_slow, macd_signal, boll_window, cci_period,
                     adx_period, tema_period, atr_period});
}

std::vector<double> sma(std::span<const double> values, std::size_t window) {
    require_period(window);
    require_length(values.size(), window, "sma");
    std::vector<double> out(values.size(), kNaN);
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += values[i];
        if (i >= window) sum -= values[i - window];
        if (i + 1 >= window) out[i] = sum / static_cast<double>(window);
    }
    return out;
}

std::vector<double> ema(std::span<const double> values, std::size_t period) {
    return smooth(values, period, 2.0 / (static_cast<double>(period) + 1.0), "ema");
}

std::vector<double> wilder(std::span<const double> values, std::size_t period) {
    return smooth(values, period, 1.0 / static_cast<double>(period), "wilder");
}

std::vector<double> williams_r(std::span<const double> high, std::span<const double> low,
                               std::span<const double> close, std::size_t period) {
    require_period(period);
    require_bars(high, low, close);
    require_length(close.size(), period, "williams_r");
    std::vector<double> out(close.size(), kNaN);
    for (std::size_t i = period - 1; i < close.size(); ++i) {
        double hh = high[i - period + 1];
        double ll = low[i - period + 1];
        for (std::size_t k = i - period + 2; k <= i; ++k) {
            hh = std::max(hh, high[k]);
            ll = std::min(ll, low[k]);
        }
        if (hh == ll) {
            out[i] = -50.0;
        } else {
            out[i] = std::clamp(-100.0 * (hh - close[i]) / (hh - ll), -100.0, 0.0);
        }
    }
    return out;
}

std::vector<double> momentum(std::span<const double> close, std::size_t n) {
    require_period(n);
    require_length(close.size(), n + 1, "momentum");
    std::vector<double> out(close.size(), kNaN);
    for (std::size_t i = n; i < close.size(); ++i) out[i] = close[i] - close[i - n];
    return out;
}

std::vector<double> rsi(std::span<const double> close, std::size_t period) {
    require_period(period);
    require_length(close.size(), period + 1, "rsi");
    const std::size_t n = close.size();
    std::vector<double> gain(n, kNaN);
    std::vector<double> loss(n, kNaN);
    for (std::size_t i = 1; i < n; ++i) {
        const double d = close[i] - close[i - 1];
        gain[i] = d > 0.0 ? d : 0.0;
        loss[i] = d < 0.0 ? -d : 0.0;
    }
    const auto avg_gain = wilder(gain, period);
    const auto avg_loss = wilder(loss, period);
    std::vector<double> out(n, kNaN);
    for (std::size_t i = period; i < n; ++i) {
        const double ag = avg_gain[i];
        const double al = avg_loss[i];
        if (ag == 0.0 && al == 0.0) {
            out[i] = 50.0;
        } else if (al == 0.0) {
            out[i] = 100.0;
        } else {
            out[i] = std::clamp(100.0 - 100.0 / (1.0 + ag / al), 0.0, 100.0);
        }
    }
    return out;
}

MacdResult macd(std::span<const double> close, std::size_t fast, std::size_t slow,
                std::size_t signal_period) {
    require_period(fast);
    require_period(signal_period);
    if (fast >= slow) throw Error(errc::invalid_argument, "macd needs fast < slow");
    require_length(close.size(), slow + signal_period - 1, "macd");
    const auto ema_fast = ema(close, fast);
    const auto ema_slow = ema(close, slow);
    MacdResult r;
    r.macd.assign(close.size(), kNaN);
    for (std::size_t i = slow - 1; i < close.size(); ++i) {
        r.macd[i] = ema_fast[i] - ema_slow[i];
    }
    r.signal = ema(r.macd, signal_period);
    r.histogram.assign(close.size(), kNaN);
    for (std::size_t i = 0; i < close.size(); ++i) {
        if (std::isfinite(r.signal[i])) r.histogram[i] = r.macd[i] - r.signal[i];
    }
    return r;
}

std::vector<double> bollinger_pctb(std::span<const double> close, std::size_t window,
                                   double k) {
    require_period(window);
    if (!(k > 0.0)) throw Error(errc::invalid_argument, "bollinger k must be positive");
    require_length(close.size(), window, "bollinger_pctb");
    std::vector<double> out(close.size(), kNaN);
    for (std::size_t i = window - 1; i < close.size(); ++i) {
        double mean = 0.0;
        for (std::size_t j = i + 1 - window; j <= i; ++j) mean += close[j];
        mean /= static_cast<double>(window);
        double var = 0.0;
        for (std::size_t j = i + 1 - window; j <= i; ++j) {
            var += (close[j] - mean) * (close[j] - mean);
        }
        const double sigma = std::sqrt(var / static_cast<double>(window));
        if (sigma == 0.0) {
            out[i] = 0.5;
        } else {
            out[i] = (close[i] - (mean - k * sigma)) / (2.0 * k * sigma);
        }
    }
    return out;
}

std::vector<double> cci(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period) {
    require_period(period);
    require_bars(high, low, close);
    require_length(close.size(), period, "cci");
    const std::size_t n = close.size();
    std::vector<double> tp(n);
    for (std::size_t i = 0; i < n; ++i) tp[i] = (high[i] + low[i] + close[i]) / 3.0;
    std::vector<double> out(n, kNaN);
    for (std::size_t i = period - 1; i < n; ++i) {
        double mean = 0.0;
        for (std::size_t j = i + 1 - period; j <= i; ++j) mean += tp[j];
        mean /= static_cast<double>(period);
        double mad = 0.0;
        for (std::size_t j = i + 1 - period; j <= i; ++j) mad += std::fabs(tp[j] - mean);
        mad /= static_cast<double>(period);
        out[i] = mad == 0.0 ? 0.0 : (tp[i] - mean) / (0.015 * mad);
    }
    return out;
}

std::vector<double> adx(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period) {
    require_period(period);
    require_bars(high, low, close);
    require_length(close.size(), 2 * period, "adx");
    const std::size_t n = close.size();
    std::vector<double> tr(n, kNaN);
    std::vector<double> pdm(n, kNaN);
    std::vector<double> ndm(n, kNaN);
    for (std::size_t i = 1; i < n; ++i) {
        tr[i] = std::max({high[i] - low[i], std::fabs(high[i] - close[i - 1]),
                          std::fabs(low[i] - close[i - 1])});
        const double up = high[i] - high[i - 1];
        const double down = low[i - 1] - low[i];
        pdm[i] = (up > down && up > 0.0) ? up : 0.0;
        ndm[i] = (down > up && down > 0.0) ? down : 0.0;
    }
    const auto s_tr = wilder(tr, period);
    const auto s_pdm = wilder(pdm, period);
    const auto s_ndm = wilder(ndm, period);
    std::vector<double> dx(n, kNaN);
    for (std::size_t i = period; i < n; ++i) {
        const double pdi = s_tr[i] > 0.0 ? 100.0 * s_pdm[i] / s_tr[i] : 0.0;
        const double ndi = s_tr[i] > 0.0 ? 100.0 * s_ndm[i] / s_tr[i] : 0.0;
        dx[i] = pdi + ndi > 0.0 ? 100.0 * std::fabs(pdi - ndi) / (pdi + ndi) : 0.0;
    }
    auto out = wilder(dx, period);
    for (double& v : out) {
        if (std::isfinite(v)) v = std::clamp(v, 0.0, 100.0);
    }
    return out;
}

std::vector<double> tema(std::span<const double> close, std::size_t period) {
    require_period(period);
    require_length(close.size(), 3 * period - 2, "tema");
    const auto e1 = ema(close, period);
    const auto e2 = ema(e1, period);
    const auto e3 = ema(e2, period);
    std::vector<double> out(close.size(), kNaN);
    for (std::size_t i = 0; i < close.size(); ++i) {
        if (std::isfinite(e3[i])) out[i] = 3.0 * e1[i] - 3.0 * e2[i] + e3[i];
    }
    return out;
}

std::vector<double> atr(std::span<const double> high, std::span<const double> low,
                        std::span<const double> close, std::size_t period) {
    require_period(period);
    require_bars(high, low, close);
    require_length(close.size(), period + 1, "atr");
    const std::size_t n = close.size();
    std::vector<double> tr(n, kNaN);
    for (std::size_t i = 1; i < n; ++i) {
        tr[i] = std::max({high[i] - low[i], std::fabs(high[i] - close[i - 1]),
                          std::fabs(low[i] - close[i - 1])});
    }
    return wilder(tr, period);
}

std::size_t IndicatorMatrix::valid_count() const {
    std::size_t n = 0;
    for (const auto v : valid) n += v != 0;
    return n;
}

IndicatorMatrix build_indicator_matrix(const ingest::PriceSeries& prices,
                                       const IndicatorConfig& config) {
    const std::size_t warmup = config.max_window();
    require_length(prices.size(), warmup + 1, "build_indicator_matrix");

    const auto close = prices.adj_close();
    const auto high = prices.adjusted_high();
    const auto low = prices.adjusted_low();

    MacdResult macd_cols = macd(close, config.macd_fast, config.macd_slow, config.macd_signal);
    const std::array<std::vector<double>, 15> cols = {
        sma(close, config.sma_short),
        sma(close, config.sma_mid),
        sma(close, config.sma_long),
        williams_r(high, low, close, config.willr_period),
        momentum(close, config.mom_short),
        momentum(close, config.mom_long),
        rsi(close, config.rsi_period),
        std::move(macd_cols.macd),
        std::move(macd_cols.signal),
        std::move(macd_cols.histogram),
        bollinger_pctb(close, config.boll_window, config.boll_k),
        cci(high, low, close, config.cci_period),
        adx(high, low, close, config.adx_period),
        tema(close, config.tema_period),
        atr(high, low, close, config.atr_period),
    };

    IndicatorMatrix m;
    m.dates = prices.dates();
    m.columns.assign(kFeatureNames.begin(), kFeatureNames.end());
    m.rows.resize(prices.size());
    m.valid.assign(prices.size(), 0);
    for (std::size_t i = 0; i < prices.size(); ++i) {
        m.rows[i].resize(kFeatureNames.size());
        bool finite = true;
        for (std::size_t c = 0; c < kFeatureNames.size(); ++c) {
            m.rows[i][c] = cols[c][i];
            finite = finite && std::isfinite(cols[c][i]);
        }
        m.valid[i] = (i >= warmup && finite) ? 1 : 0;
    }
    return m;
}

}  // namespace smkt::indicators
