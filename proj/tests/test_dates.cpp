#include <doctest.h>

#include "smkt/dates.hpp"
#include "smkt/errors.hpp"

using smkt::Date;
using smkt::Error;
using smkt::errc;

TEST_SUITE("dates") {

TEST_CASE("serial epoch and round trips") {
    CHECK(Date::from_ymd(1970, 1, 1).serial() == 0);
    CHECK(Date::from_ymd(1970, 1, 2).serial() == 1);
    CHECK(Date::from_ymd(1969, 12, 31).serial() == -1);
    CHECK(Date::from_ymd(2000, 3, 1).serial() == 11017);
    CHECK(Date::from_ymd(2014, 1, 2).serial() == 16072);

    for (const int serial : {-1000, 0, 1, 59, 365, 16072, 200000}) {
        const Date d = Date::from_serial(serial);
        CHECK(Date::from_ymd(d.year(), d.month(), d.day()) == d);
        CHECK(d.serial() == serial);
    }
}

TEST_CASE("component extraction") {
    const Date d = Date::from_ymd(2016, 2, 29);
    CHECK(d.year() == 2016);
    CHECK(d.month() == 2);
    CHECK(d.day() == 29);
}

TEST_CASE("leap year rules") {
    CHECK_NOTHROW(Date::from_ymd(2016, 2, 29));
    CHECK_NOTHROW(Date::from_ymd(2000, 2, 29));
    CHECK_THROWS_AS(Date::from_ymd(2015, 2, 29), Error);
    CHECK_THROWS_AS(Date::from_ymd(1900, 2, 29), Error);
    CHECK_THROWS_AS(Date::from_ymd(2014, 4, 31), Error);
    CHECK_THROWS_AS(Date::from_ymd(2014, 13, 1), Error);
    CHECK_THROWS_AS(Date::from_ymd(2014, 0, 1), Error);
    CHECK_THROWS_AS(Date::from_ymd(2014, 1, 0), Error);
}

TEST_CASE("iso parsing") {
    REQUIRE(Date::parse("2014-01-02").has_value());
    CHECK(*Date::parse("2014-01-02") == Date::from_ymd(2014, 1, 2));
    CHECK(*Date::parse("1969-12-31") == Date::from_ymd(1969, 12, 31));

    CHECK_FALSE(Date::parse("2014-1-02").has_value());
    CHECK_FALSE(Date::parse("2014-01-2").has_value());
    CHECK_FALSE(Date::parse("14-01-02").has_value());
    CHECK_FALSE(Date::parse("2014/01/02").has_value());
    CHECK_FALSE(Date::parse("2014-01-02x").has_value());
    CHECK_FALSE(Date::parse("2014-02-30").has_value());
    CHECK_FALSE(Date::parse("").has_value());
    CHECK_FALSE(Date::parse("2014-01").has_value());
}

TEST_CASE("formatting") {
    CHECK(Date::from_ymd(2014, 1, 2).to_string() == "2014-01-02");
    CHECK(Date::from_ymd(1999, 12, 31).to_string() == "1999-12-31");
    CHECK(Date::from_ymd(987, 6, 5).to_string() == "0987-06-05");
}

TEST_CASE("weekdays") {
    CHECK(Date::from_ymd(1970, 1, 1).weekday() == 4);   // Thursday
    CHECK(Date::from_ymd(2014, 1, 2).weekday() == 4);   // Thursday
    CHECK(Date::from_ymd(2014, 1, 4).weekday() == 6);   // Saturday
    CHECK(Date::from_ymd(2014, 1, 5).weekday() == 0);   // Sunday
    CHECK(Date::from_ymd(2014, 1, 6).weekday() == 1);   // Monday
    CHECK(Date::from_ymd(1969, 12, 28).weekday() == 0); // Sunday (pre-epoch)

    CHECK(Date::from_ymd(2014, 1, 4).is_weekend());
    CHECK(Date::from_ymd(2014, 1, 5).is_weekend());
    CHECK_FALSE(Date::from_ymd(2014, 1, 6).is_weekend());
}

TEST_CASE("business day stepping") {
    // Friday -> Monday, mid-week -> next day.
    CHECK(Date::from_ymd(2014, 1, 3).next_business_day() == Date::from_ymd(2014, 1, 6));
    CHECK(Date::from_ymd(2014, 1, 6).next_business_day() == Date::from_ymd(2014, 1, 7));
    // Saturday and Sunday also land on Monday.
    CHECK(Date::from_ymd(2014, 1, 4).next_business_day() == Date::from_ymd(2014, 1, 6));
    CHECK(Date::from_ymd(2014, 1, 5).next_business_day() == Date::from_ymd(2014, 1, 6));
}

TEST_CASE("arithmetic and ordering") {
    const Date d = Date::from_ymd(2014, 2, 27);
    CHECK(d.add_days(2) == Date::from_ymd(2014, 3, 1));
    CHECK(d.add_days(-27) == Date::from_ymd(2014, 1, 31));
    CHECK(d < d.add_days(1));
    CHECK(d.add_days(1) > d);
    CHECK(d == Date::from_serial(d.serial()));
}

}  // TEST_SUITE
