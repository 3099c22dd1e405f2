#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace smkt {

/// A calendar day, stored as the count of days since 1970-01-01.
/// Proleptic Gregorian; no time-of-day, no timezone.
class Date {
public:
    Date() = default;

    static Date from_serial(std::int32_t days) { return Date(days); }

    /// Throws Error(invalid_argument) on an impossible calendar date.
    static Date from_ymd(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD". Returns nullopt on any deviation.
    static std::optional<Date> parse(std::string_view iso);

    std::int32_t serial() const { return serial_; }

    int year() const;
    unsigned month() const;
    unsigned day() const;

    /// 0 = Sunday .. 6 = Saturday.
    unsigned weekday() const;
    bool is_weekend() const;

    Date add_days(int n) const { return Date(serial_ + n); }
    /// Next day skipping Saturday and Sunday.
    Date next_business_day() const;

    std::string to_string() const;

    auto operator<=>(const Date&) const = default;

private:
    explicit Date(std::int32_t serial) : serial_(serial) {}
    std::int32_t serial_ = 0;
};

}  // namespace smkt
