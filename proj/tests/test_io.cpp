#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"
#include "smkt/rng.hpp"
#include "test_util.hpp"

using namespace smkt;
using testutil::TempDir;

TEST_SUITE("io") {

TEST_CASE("csv line splitting") {
    CHECK(io::split_csv_line("a,b,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(io::split_csv_line("a,,c") == std::vector<std::string>{"a", "", "c"});
    CHECK(io::split_csv_line("") == std::vector<std::string>{""});
    CHECK(io::split_csv_line("x") == std::vector<std::string>{"x"});
    CHECK(io::split_csv_line(",") == std::vector<std::string>{"", ""});
}

TEST_CASE("trim") {
    CHECK(io::trim("  a b  ") == "a b");
    CHECK(io::trim("\t x\r\n") == "x");
    CHECK(io::trim("") == "");
    CHECK(io::trim("   ") == "");
}

TEST_CASE("double parsing accepts exactly finite numbers") {
    double v = 0.0;
    CHECK(io::parse_double("1.5", v));
    CHECK(v == 1.5);
    CHECK(io::parse_double("-2e-3", v));
    CHECK(v == -2e-3);
    CHECK(io::parse_double(" 3.0 ", v));
    CHECK(v == 3.0);
    CHECK(io::parse_double("0", v));

    CHECK_FALSE(io::parse_double("", v));
    CHECK_FALSE(io::parse_double("abc", v));
    CHECK_FALSE(io::parse_double("1.5x", v));
    CHECK_FALSE(io::parse_double("1,5", v));
    CHECK_FALSE(io::parse_double("nan", v));
    CHECK_FALSE(io::parse_double("inf", v));
    CHECK_FALSE(io::parse_double("-inf", v));
}

TEST_CASE("double formatting round-trips exactly") {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        double v = (rng.next_unit() - 0.5) * std::pow(10.0, double(rng.next_below(17)) - 8);
        const std::string s = io::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(-1.0) == "-1");
    CHECK(io::format_double(0.1) == "0.1");
}

TEST_CASE("integral doubles print without exponent") {
    CHECK(io::format_double(1000000.0) == "1000000");
    CHECK(io::format_double(-250000.0) == "-250000");
    CHECK(io::format_double(42.0) == "42");
}

TEST_CASE("atomic write creates parents and leaves no temp files") {
    TempDir tmp;
    const auto target = tmp.path() / "deep" / "nested" / "out.csv";
    io::atomic_write(target, "hello\n");
    CHECK(testutil::read_file(target.string()) == "hello\n");

    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e :
         std::filesystem::directory_iterator(target.parent_path())) {
        ++entries;
    }
    CHECK(entries == 1);

    io::atomic_write(target, "replaced\n");
    CHECK(testutil::read_file(target.string()) == "replaced\n");
}

TEST_CASE("read_file reports a missing path") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/really/not-here.csv"), Error);
    try {
        io::read_file("/nonexistent/really/not-here.csv");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_input);
        CHECK(e.exit_code() == 10);
    }
}

TEST_CASE("dated csv loading skips comments and validates") {
    TempDir tmp;
    const std::string path = tmp.file("t.csv");
    testutil::write_file(path,
                         "# config: {\"seed\":1}\n"
                         "date,alpha,beta\n"
                         "2014-01-02,1.5,2\n"
                         "# interior comment\n"
                         "2014-01-03,-0.25,7\n");
    const io::DatedTable t = io::load_dated_csv(path);
    CHECK(t.columns == std::vector<std::string>{"alpha", "beta"});
    REQUIRE(t.dates.size() == 2);
    CHECK(t.dates[0].to_string() == "2014-01-02");
    CHECK(t.rows[1][0] == -0.25);
    CHECK(t.column_index("beta") == 1);
    CHECK_THROWS_AS(t.column_index("gamma"), Error);

    const DatedSeries s = t.series("alpha");
    CHECK(s.size() == 2);
    CHECK(s.values[1] == -0.25);
}

TEST_CASE("dated csv rejects malformed content") {
    TempDir tmp;
    const auto expect = [&](const std::string& content, errc code) {
        const std::string path = tmp.file("bad.csv");
        testutil::write_file(path, content);
        try {
            io::load_dated_csv(path);
            FAIL_CHECK("expected a load error");
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
    };
    expect("value,alpha\n1,2\n", errc::missing_column);  // no date column
    expect("date,a\n2014-01-02,1\n2014-01-02,2\n", errc::non_monotonic_dates);
    expect("date,a\n2014-01-03,1\n2014-01-02,2\n", errc::non_monotonic_dates);
    expect("date,a\n2014-01-02,zebra\n", errc::malformed_number);
    expect("date,a\n2014-01-02\n", errc::malformed_line);
    expect("date,a\nnot-a-date,1\n", errc::malformed_line);
}

TEST_CASE("load_series picks one column") {
    TempDir tmp;
    const std::string path = tmp.file("s.csv");
    testutil::write_file(path, "date,v\n2014-01-02,3\n2014-01-03,4\n");
    const DatedSeries s = io::load_series(path, "v");
    CHECK(s.values == std::vector<double>{3.0, 4.0});
}

}  // TEST_SUITE
