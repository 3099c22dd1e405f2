#include "smkt/series.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "smkt/errors.hpp"

namespace smkt {

void DatedSeries::validate() const {
    if (values.empty()) throw Error(errc::too_short, "series is empty");
    if (dates.size() != values.size()) {
        throw Error(errc::invalid_argument, "series has " + std::to_string(dates.size()) +
                                                " dates but " + std::to_string(values.size()) +
                                                " values");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(errc::invalid_argument, "non-finite value at index " + std::to_string(i));
        }
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            throw Error(errc::non_monotonic_dates,
                        "dates not strictly increasing at index " + std::to_string(i));
        }
    }
}

DatedSeries pct_change(const DatedSeries& s) {
    s.validate();
    if (s.size() < 2) throw Error(errc::too_short, "pct_change needs at least 2 points");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.values[i] == 0.0) {
            throw Error(errc::zero_base, "zero value at index " + std::to_string(i));
        }
    }
    DatedSeries out;
    out.dates.reserve(s.size() - 1);
    out.values.reserve(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        out.dates.push_back(s.dates[i + 1]);
        out.values.push_back(100.0 * (s.values[i + 1] - s.values[i]) / s.values[i]);
    }
    return out;
}

DatedSeries diff(const DatedSeries& s, std::size_t k) {
    s.validate();
    if (k == 0) throw Error(errc::invalid_argument, "diff order must be positive");
    if (s.size() <= k) throw Error(errc::too_short, "diff order >= series length");
    DatedSeries out;
    out.dates.reserve(s.size() - k);
    out.values.reserve(s.size() - k);
    for (std::size_t i = 0; i + k < s.size(); ++i) {
        out.dates.push_back(s.dates[i + k]);
        out.values.push_back(s.values[i + k] - s.values[i]);
    }
    return out;
}

std::pair<DatedSeries, DatedSeries> align(const DatedSeries& a, const DatedSeries& b,
                                          AlignFill fill) {
    a.validate();
    b.validate();
    std::unordered_map<std::int32_t, double> b_by_date;
    b_by_date.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) b_by_date.emplace(b.dates[i].serial(), b.values[i]);

    DatedSeries out_a, out_b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto it = b_by_date.find(a.dates[i].serial());
        if (it != b_by_date.end()) {
            out_a.dates.push_back(a.dates[i]);
            out_a.values.push_back(a.values[i]);
            out_b.dates.push_back(a.dates[i]);
            out_b.values.push_back(it->second);
        } else if (fill == AlignFill::zero) {
            out_a.dates.push_back(a.dates[i]);
            out_a.values.push_back(a.values[i]);
            out_b.dates.push_back(a.dates[i]);
            out_b.values.push_back(0.0);
        }
    }
    if (fill == AlignFill::drop && out_a.values.empty()) {
        throw Error(errc::empty_intersection, "series share no dates");
    }
    return {std::move(out_a), std::move(out_b)};
}

}  // namespace smkt
