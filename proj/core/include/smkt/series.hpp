#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "smkt/dates.hpp"

namespace smkt {

/// A dated real-valued series: strictly increasing calendar days with one
/// finite value per day. The shared currency of every analysis module.
struct DatedSeries {
    std::vector<Date> dates;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    /// Throws Error on any invariant violation: empty, length mismatch,
    /// non-increasing dates, non-finite values.
    void validate() const;
};

enum class AlignFill {
    drop,  // keep only dates present in both series
    zero,  // keep a's dates; missing b values become 0
};

/// Day-over-day percentage change: 100 * (v[i+1] - v[i]) / v[i], dated at
/// day i+1. Steps follow the series calendar, so a weekend gap is one step.
DatedSeries pct_change(const DatedSeries& s);

/// k-step difference: v[i+k] - v[i], dated at day i+k.
DatedSeries diff(const DatedSeries& s, std::size_t k);

/// Puts two series on a common calendar. Both outputs always share an
/// identical date vector.
std::pair<DatedSeries, DatedSeries> align(const DatedSeries& a, const DatedSeries& b,
                                          AlignFill fill);

}  // namespace smkt
