#include "smkt/econ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "smkt/dist.hpp"
#include "smkt/errors.hpp"

namespace smkt::econ {
namespace {

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Solves A x = b for symmetric positive definite A via Cholesky.
// Also fills inv_diag with diag(A^-1) for standard errors.
// Throws rank_deficient when a pivot collapses.
std::vector<double> spd_solve(std::vector<std::vector<double>> a, std::vector<double> b,
                              std::vector<double>* inv_diag) {
    const std::size_t n = b.size();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(a[i][i]));
    if (max_diag == 0.0) throw Error(errc::rank_deficient, "all-zero design");

    // In-place lower Cholesky: a[i][j] = L[i][j] for j <= i.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i][j];
            for (std::size_t k = 0; k < j; ++k) sum -= a[i][k] * a[j][k];
            if (i == j) {
                if (sum <= max_diag * 1e-13) {
                    throw Error(errc::rank_deficient,
                                "design matrix is rank deficient (pivot " + std::to_string(i) + ")");
                }
                a[i][i] = std::sqrt(sum);
            } else {
                a[i][j] = sum / a[j][j];
            }
        }
    }
    // Forward then back substitution.
    for (std::size_t i = 0; i < n; ++i) {
        double sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= a[i][k] * b[k];
        b[i] = sum / a[i][i];
    }
    for (std::size_t ir = n; ir-- > 0;) {
        double sum = b[ir];
        for (std::size_t k = ir + 1; k < n; ++k) sum -= a[k][ir] * b[k];
        b[ir] = sum / a[ir][ir];
    }
    if (inv_diag) {
        // Column j of A^-1 solves A x = e_j; we only need x[j].
        inv_diag->assign(n, 0.0);
        std::vector<double> col(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::fill(col.begin(), col.end(), 0.0);
            col[j] = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                double sum = col[i];
                for (std::size_t k = 0; k < i; ++k) sum -= a[i][k] * col[k];
                col[i] = sum / a[i][i];
            }
            for (std::size_t ir = n; ir-- > 0;) {
                double sum = col[ir];
                for (std::size_t k = ir + 1; k < n; ++k) sum -= a[k][ir] * col[k];
                col[ir] = sum / a[ir][ir];
            }
            (*inv_diag)[j] = col[j];
        }
    }
    return b;
}

// Pearson correlation over two equal-length windows; 0 when either window
// is degenerate.
double pearson(std::span<const double> u, std::span<const double> w) {
    const std::size_t n = u.size();
    const double mu = mean_of(u);
    const double mw = mean_of(w);
    double suw = 0.0, suu = 0.0, sww = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double du = u[i] - mu;
        const double dw = w[i] - mw;
        suw += du * dw;
        suu += du * du;
        sww += dw * dw;
    }
    if (suu == 0.0 || sww == 0.0) return 0.0;
    return std::clamp(suw / std::sqrt(suu * sww), -1.0, 1.0);
}

}  // namespace

std::vector<double> acf(std::span<const double> v, std::size_t max_lag) {
    const std::size_t n = v.size();
    if (max_lag == 0) throw Error(errc::invalid_argument, "max_lag must be positive");
    if (n <= max_lag) throw Error(errc::too_short, "series length must exceed max_lag");
    const double mu = mean_of(v);
    double denom = 0.0;
    for (const double x : v) denom += (x - mu) * (x - mu);
    if (denom == 0.0) throw Error(errc::zero_variance, "series has zero variance");
    std::vector<double> rho(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) num += (v[t] - mu) * (v[t + k] - mu);
        rho[k - 1] = std::clamp(num / denom, -1.0, 1.0);
    }
    return rho;
}

std::vector<double> pacf(std::span<const double> v, std::size_t max_lag) {
    const std::vector<double> rho = acf(v, max_lag);
    // Durbin-Levinson: phi[k][k] is the PACF at lag k.
    std::vector<double> prev(max_lag + 1, 0.0), cur(max_lag + 1, 0.0);
    std::vector<double> out(max_lag);
    prev[1] = rho[0];
    out[0] = rho[0];
    for (std::size_t k = 2; k <= max_lag; ++k) {
        double num = rho[k - 1];
        double den = 1.0;
        for (std::size_t j = 1; j < k; ++j) {
            num -= prev[j] * rho[k - 1 - j];
            den -= prev[j] * rho[j - 1];
        }
        const double phi_kk = (den == 0.0) ? 0.0 : num / den;
        cur[k] = phi_kk;
        for (std::size_t j = 1; j < k; ++j) cur[j] = prev[j] - phi_kk * prev[k - j];
        out[k - 1] = std::clamp(phi_kk, -1.0, 1.0);
        std::swap(prev, cur);
    }
    return out;
}

LjungBoxResult ljung_box(std::span<const double> v, std::size_t lags) {
    const std::size_t n = v.size();
    if (n <= lags) throw Error(errc::too_short, "series length must exceed lag count");
    const std::vector<double> rho = acf(v, lags);
    double q = 0.0;
    for (std::size_t k = 1; k <= lags; ++k) {
        q += rho[k - 1] * rho[k - 1] / static_cast<double>(n - k);
    }
    q *= static_cast<double>(n) * static_cast<double>(n + 2);
    const double p = 1.0 - dist::chi2_cdf(q, static_cast<double>(lags));
    return {q, std::clamp(p, 0.0, 1.0)};
}

AdfResult adf_test(std::span<const double> v, int max_lag) {
    if (max_lag < 0) throw Error(errc::invalid_argument, "adf lag order must be >= 0");
    const std::size_t n = v.size();
    if (n < static_cast<std::size_t>(max_lag) + 3) {
        throw Error(errc::too_short, "series too short for adf lag order");
    }
    std::vector<double> dv(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) dv[i] = v[i + 1] - v[i];

    // Regression rows are t = max_lag .. n-2 over the differenced series.
    const std::size_t rows = dv.size() - static_cast<std::size_t>(max_lag);
    const std::size_t cols = 2 + static_cast<std::size_t>(max_lag);
    if (rows <= cols) throw Error(errc::too_short, "not enough observations for adf regression");

    std::vector<std::vector<double>> X(rows, std::vector<double>(cols));
    std::vector<double> y(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + static_cast<std::size_t>(max_lag);
        y[r] = dv[t];
        X[r][0] = 1.0;
        X[r][1] = v[t];  // level lagged one step behind dv[t]
        for (int i = 1; i <= max_lag; ++i) {
            X[r][1 + static_cast<std::size_t>(i)] = dv[t - static_cast<std::size_t>(i)];
        }
    }
    OlsFit fit;
    try {
        fit = ols(X, y);
    } catch (const Error& e) {
        if (e.code() == errc::rank_deficient) {
            throw Error(errc::singular_design, "adf design matrix is singular");
        }
        throw;
    }
    double t_stat = 0.0;
    if (fit.std_errors[1] > 0.0) {
        t_stat = fit.coef[1] / fit.std_errors[1];
    }
    // Exact fit leaves a zero standard error; gamma is then numerically
    // zero and no rejection is reported.
    AdfResult res;
    res.t_stat = t_stat;
    res.gamma = fit.coef[1];
    res.lag_order = max_lag;
    res.reject_1pct = t_stat < -3.43;
    res.reject_5pct = t_stat < -2.86;
    res.reject_10pct = t_stat < -2.57;
    return res;
}

CcfReport ccf(const DatedSeries& x, const DatedSeries& y, std::size_t max_lag) {
    x.validate();
    y.validate();
    if (x.dates != y.dates) throw Error(errc::not_aligned, "ccf inputs must share dates");
    const std::size_t n = x.size();
    if (n <= max_lag + 2) throw Error(errc::too_short, "series too short for ccf max_lag");
    auto variance_of = [](std::span<const double> v) {
        const double mu = mean_of(v);
        double s = 0.0;
        for (const double e : v) s += (e - mu) * (e - mu);
        return s;
    };
    if (variance_of(x.values) == 0.0 || variance_of(y.values) == 0.0) {
        throw Error(errc::zero_variance, "ccf input has zero variance");
    }
    CcfReport report;
    report.conf_bound = 1.96 / std::sqrt(static_cast<double>(n));
    const int l = static_cast<int>(max_lag);
    for (int k = -l; k <= l; ++k) {
        const std::size_t m = n - static_cast<std::size_t>(std::abs(k));
        std::span<const double> xs(x.values);
        std::span<const double> ys(y.values);
        // corr(x_t, y_{t+k}) over the full overlap.
        const auto u = (k >= 0) ? xs.subspan(0, m) : xs.subspan(static_cast<std::size_t>(-k), m);
        const auto w = (k >= 0) ? ys.subspan(static_cast<std::size_t>(k), m) : ys.subspan(0, m);
        report.lags.push_back(k);
        report.correlations.push_back(pearson(u, w));
    }
    return report;
}

OlsFit ols(const std::vector<std::vector<double>>& X, std::span<const double> y) {
    const std::size_t rows = X.size();
    if (rows == 0 || rows != y.size()) {
        throw Error(errc::invalid_argument, "ols design/response size mismatch");
    }
    const std::size_t cols = X[0].size();
    if (rows <= cols) throw Error(errc::too_short, "ols needs more rows than columns");

    std::vector<std::vector<double>> xtx(cols, std::vector<double>(cols, 0.0));
    std::vector<double> xty(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < cols; ++i) {
            xty[i] += X[r][i] * y[r];
            for (std::size_t j = 0; j <= i; ++j) xtx[i][j] += X[r][i] * X[r][j];
        }
    }
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = i + 1; j < cols; ++j) xtx[i][j] = xtx[j][i];
    }

    OlsFit fit;
    std::vector<double> inv_diag;
    fit.coef = spd_solve(std::move(xtx), std::move(xty), &inv_diag);
    fit.residuals.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        double pred = 0.0;
        for (std::size_t i = 0; i < cols; ++i) pred += X[r][i] * fit.coef[i];
        fit.residuals[r] = y[r] - pred;
        fit.rss += fit.residuals[r] * fit.residuals[r];
    }
    const double sigma2 = fit.rss / static_cast<double>(rows - cols);
    fit.std_errors.resize(cols);
    for (std::size_t i = 0; i < cols; ++i) {
        fit.std_errors[i] = std::sqrt(std::max(0.0, sigma2 * inv_diag[i]));
    }
    return fit;
}

std::string direction_label(Direction d) {
    return d == Direction::x_to_y ? "x->y" : "y->x";
}

GrangerResult granger_test(const DatedSeries& x, const DatedSeries& y, int lag, double threshold) {
    x.validate();
    y.validate();
    if (lag < 1) throw Error(errc::invalid_argument, "granger lag must be >= 1");
    if (x.dates != y.dates) throw Error(errc::not_aligned, "granger inputs must share dates");
    const std::size_t p = static_cast<std::size_t>(lag);
    const std::size_t n = y.size();
    if (n <= p) throw Error(errc::too_short, "series too short for granger lag");
    const std::size_t rows = n - p;
    if (rows <= 2 * p + 1) throw Error(errc::too_short, "not enough observations for granger test");

    std::vector<std::vector<double>> Xr(rows, std::vector<double>(1 + p));
    std::vector<std::vector<double>> Xu(rows, std::vector<double>(1 + 2 * p));
    std::vector<double> resp(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + p;
        resp[r] = y.values[t];
        Xr[r][0] = 1.0;
        Xu[r][0] = 1.0;
        for (std::size_t i = 1; i <= p; ++i) {
            Xr[r][i] = y.values[t - i];
            Xu[r][i] = y.values[t - i];
            Xu[r][p + i] = x.values[t - i];
        }
    }
    const OlsFit restricted = ols(Xr, resp);
    const OlsFit unrestricted = ols(Xu, resp);

    GrangerResult res;
    res.lag = lag;
    res.n_obs = rows;
    const double df2 = static_cast<double>(rows) - 2.0 * static_cast<double>(p) - 1.0;

    // Scale-aware zero test: an exact fit means perfect forecastability.
    double y_scale = 0.0;
    for (const double v : resp) y_scale += v * v;
    if (unrestricted.rss <= 1e-14 * std::max(y_scale, 1e-300)) {
        res.exact_fit = true;
        res.f_stat = std::numeric_limits<double>::infinity();
        res.p_value = 0.0;
        res.significant = true;
        return res;
    }
    const double num = std::max(0.0, restricted.rss - unrestricted.rss) / static_cast<double>(p);
    const double den = unrestricted.rss / df2;
    res.f_stat = num / den;
    res.p_value = std::clamp(1.0 - dist::f_cdf(res.f_stat, static_cast<double>(p), df2), 0.0, 1.0);
    res.significant = res.p_value < threshold;
    return res;
}

StationarityReport stationarity_report(const DatedSeries& s, std::size_t acf_lags,
                                       std::size_t ljung_box_lags, int adf_lag) {
    s.validate();
    StationarityReport rep;
    rep.n = s.size();
    rep.acf = acf(s.values, acf_lags);
    rep.pacf = pacf(s.values, acf_lags);
    rep.ljung_box = ljung_box(s.values, ljung_box_lags);
    rep.adf = adf_test(s.values, adf_lag);
    rep.conf_bound = 1.96 / std::sqrt(static_cast<double>(rep.n));
    return rep;
}

}  // namespace smkt::econ
