#!/usr/bin/env python3
"""Produces the frozen reference constants used by the C++ unit tests.

The generator below mirrors the library PRNG (splitmix64 with stream
splitting, 53-bit unit doubles, Box-Muller normals) independently, so the
printed statistics double as a cross-check of the PRNG: the C++ tests
regenerate the same series through the library Rng and must land on the
statsmodels/scipy numbers printed here.

Run from the repository root:  python3 tests/oracles/make_goldens.py
"""
import math

import numpy as np
import scipy.special as sp
import scipy.stats as st
import statsmodels.api as sm
from statsmodels.stats.diagnostic import acorr_ljungbox
from statsmodels.tsa.stattools import adfuller, grangercausalitytests

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return (z ^ (z >> 31)) & MASK


class Rng:
    def __init__(self, seed, stream=0):
        self.state = mix((seed + GOLDEN * stream) & MASK)
        self.spare = None

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK
        return mix(self.state)

    def next_unit(self):
        return (self.next_u64() >> 11) * 2.0**-53

    def next_normal(self):
        if self.spare is not None:
            out, self.spare = self.spare, None
            return out
        u1 = ((self.next_u64() >> 11) + 1) * 2.0**-53
        u2 = self.next_unit()
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        self.spare = r * math.sin(theta)
        return r * math.cos(theta)


def dump(name, values, fmt="%.17g"):
    if np.isscalar(values):
        print(f"{name} = {fmt % values}")
    else:
        body = ", ".join(fmt % v for v in values)
        print(f"{name} = {{{body}}}")


print("== rng ==")
r = Rng(42)
dump("rng42_u64", [Rng(42).next_u64() for _ in range(1)], "%d")
r = Rng(42)
dump("rng42_first3", [r.next_u64() for _ in range(3)], "%d")
r = Rng(42, 1)
dump("rng42s1_first2", [r.next_u64() for _ in range(2)], "%d")
r = Rng(42)
dump("rng42_unit_first3", [r.next_unit() for _ in range(3)])
r = Rng(42)
dump("rng42_normal_first4", [r.next_normal() for _ in range(4)])

print()
print("== dist (scipy) ==")
dump("norm_cdf", [st.norm.cdf(x) for x in (-2.5, -1.96, -0.5, 0.0, 1.0, 1.96, 3.1)])
dump("chi2_cdf_3", [st.chi2.cdf(x, 3) for x in (0.5, 2.0, 7.81, 15.0)])
dump("chi2_cdf_10", [st.chi2.cdf(x, 10) for x in (3.0, 9.34, 18.31)])
dump("f_cdf_2_20", [st.f.cdf(x, 2, 20) for x in (0.5, 3.49, 10.0)])
dump("f_cdf_5_50", [st.f.cdf(x, 5, 50) for x in (1.0, 2.40, 4.0)])
dump("gamma_p", [sp.gammainc(a, x) for a, x in ((0.5, 0.25), (2.0, 1.0), (7.5, 9.0))])
dump("inc_beta", [sp.betainc(a, b, x) for a, b, x in ((0.5, 0.5, 0.3), (2.0, 5.0, 0.4),
                                                      (10.0, 3.0, 0.8))])

print()
print("== econ series A: x_t = 0.6 x_{t-1} + z_t, z from Rng(7), n=80 ==")
r = Rng(7)
a = []
x = 0.0
for _ in range(80):
    x = 0.6 * x + r.next_normal()
    a.append(x)
a = np.array(a)
dump("seriesA_first3", a[:3])
dump("seriesA_last1", a[-1:])

mean = a.mean()
c = a - mean
denom = np.dot(c, c)
acf = [np.dot(c[:-k], c[k:]) / denom for k in range(1, 6)]
dump("acfA", acf)

# Durbin-Levinson on the biased sample ACF.
rho = np.array([1.0] + acf)
phi = np.zeros((6, 6))
pacf = []
phi[1][1] = rho[1]
pacf.append(phi[1][1])
for k in range(2, 6):
    num = rho[k] - sum(phi[k - 1][j] * rho[k - j] for j in range(1, k))
    den = 1.0 - sum(phi[k - 1][j] * rho[j] for j in range(1, k))
    phi[k][k] = num / den
    for j in range(1, k):
        phi[k][j] = phi[k - 1][j] - phi[k][k] * phi[k - 1][k - j]
    pacf.append(phi[k][k])
dump("pacfA", pacf)

lb = acorr_ljungbox(a, lags=[10])
dump("ljungA_q", lb["lb_stat"].iloc[0])
dump("ljungA_p", lb["lb_pvalue"].iloc[0])

adf = adfuller(a, maxlag=1, regression="c", autolag=None)
dump("adfA_t", adf[0])

print()
print("== econ series B: white noise Rng(11), n=120 ==")
r = Rng(11)
b = np.array([r.next_normal() for _ in range(120)])
lb = acorr_ljungbox(b, lags=[10])
dump("ljungB_q", lb["lb_stat"].iloc[0])
dump("ljungB_p", lb["lb_pvalue"].iloc[0])
adf = adfuller(b, maxlag=2, regression="c", autolag=None)
dump("adfB_t", adf[0])

print()
print("== granger pair: a_self=0.7, b_cross=0.4, Rng(3)/Rng(3,1), n=100, burn 50 ==")
rx, ry = Rng(3), Rng(3, 1)
x = y = 0.0
xs, ys = [], []
for i in range(150):
    xp = x
    x = 0.7 * xp + rx.next_normal()
    y = 0.7 * y + 0.4 * xp + ry.next_normal()
    if i >= 50:
        xs.append(x)
        ys.append(y)
xs, ys = np.array(xs), np.array(ys)
dump("grangerX_first2", xs[:2])
for lag in (1, 2):
    # statsmodels tests whether column 2 causes column 1
    res = grangercausalitytests(np.column_stack([ys, xs]), maxlag=lag, verbose=False)
    f, p, _, _ = res[lag][0]["ssr_ftest"]
    dump(f"granger_x2y_lag{lag}_f", f)
    dump(f"granger_x2y_lag{lag}_p", p)
res = grangercausalitytests(np.column_stack([xs, ys]), maxlag=1, verbose=False)
f, p, _, _ = res[1][0]["ssr_ftest"]
dump("granger_y2x_lag1_f", f)
dump("granger_y2x_lag1_p", p)

print()
print("== ols golden: y on [1, u, v], n=9 ==")
U = np.array([0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0])
V = np.array([2.0, 1.0, 4.0, 3.0, 6.0, 5.0, 8.0, 7.0, 10.0])
Y = np.array([1.1, 1.9, 3.2, 3.8, 5.1, 5.9, 7.2, 7.8, 9.1])
X = np.column_stack([np.ones(9), U, V])
fit = sm.OLS(Y, X).fit()
dump("ols_coef", fit.params)
dump("ols_rss", fit.ssr)
dump("ols_se", fit.bse)

print()
print("== ccf golden: x = seriesA[:40], y = 0.8 * x shifted +2 steps + trendlet ==")
xs = a[:40]
ys = 0.8 * np.roll(xs, 2) + 0.05 * np.arange(40)
ys[:2] = (0.3, -0.2)


def pearson(u, v):
    u = u - u.mean()
    v = v - v.mean()
    return float(np.dot(u, v) / math.sqrt(np.dot(u, u) * np.dot(v, v)))


vals = {}
for k in range(-3, 4):
    # corr(x_t, y_{t+k}) over the full overlap
    if k >= 0:
        vals[k] = pearson(xs[: 40 - k], ys[k:])
    else:
        vals[k] = pearson(xs[-k:], ys[: 40 + k])
dump("ccf_m3_to_p3", [vals[k] for k in range(-3, 4)])
dump("ccf_conf", 1.96 / math.sqrt(40))
