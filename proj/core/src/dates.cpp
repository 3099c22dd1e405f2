#include "smkt/dates.hpp"

#include <cstdio>

#include "smkt/errors.hpp"

namespace smkt {
namespace {

// Civil <-> serial conversions after Howard Hinnant's chrono-compatible
// algorithms (http://howardhinnant.github.io/date_algorithms.html).
std::int32_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int>(doe) - 719468;
}

struct Civil {
    int y;
    unsigned m;
    unsigned d;
};

Civil civil_from_days(std::int32_t z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), m, d};
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
    if (month < 1 || month > 12 || day < 1 || day > 31) {
        throw Error(errc::invalid_argument, "invalid calendar date");
    }
    Date date(days_from_civil(year, month, day));
    const Civil back = civil_from_days(date.serial_);
    if (back.y != year || back.m != month || back.d != day) {
        throw Error(errc::invalid_argument, "invalid calendar date");
    }
    return date;
}

std::optional<Date> Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
    auto digits = [&](std::size_t pos, std::size_t len, int& out) {
        out = 0;
        for (std::size_t i = pos; i < pos + len; ++i) {
            const char c = iso[i];
            if (c < '0' || c > '9') return false;
            out = out * 10 + (c - '0');
        }
        return true;
    };
    int y = 0, m = 0, d = 0;
    if (!digits(0, 4, y) || !digits(5, 2, m) || !digits(8, 2, d)) return std::nullopt;
    if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
    const std::int32_t serial = days_from_civil(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
    const Civil back = civil_from_days(serial);
    if (back.y != y || back.m != static_cast<unsigned>(m) || back.d != static_cast<unsigned>(d)) {
        return std::nullopt;
    }
    return Date::from_serial(serial);
}

int Date::year() const { return civil_from_days(serial_).y; }
unsigned Date::month() const { return civil_from_days(serial_).m; }
unsigned Date::day() const { return civil_from_days(serial_).d; }

unsigned Date::weekday() const {
    // 1970-01-01 was a Thursday.
    const std::int32_t w = (serial_ % 7 + 7 + 4) % 7;
    return static_cast<unsigned>(w);
}

bool Date::is_weekend() const {
    const unsigned w = weekday();
    return w == 0 || w == 6;
}

Date Date::next_business_day() const {
    Date next = add_days(1);
    while (next.is_weekend()) next = next.add_days(1);
    return next;
}

std::string Date::to_string() const {
    const Civil c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.y, c.m, c.d);
    return std::string(buf);
}

}  // namespace smkt
