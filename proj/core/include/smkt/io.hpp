#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "smkt/dates.hpp"
#include "smkt/series.hpp"

namespace smkt::io {

/// Splits one CSV line on commas. Fields are not quoted in any format this
/// toolkit reads or writes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Strips leading and trailing spaces, tabs, carriage returns and newlines.
std::string_view trim(std::string_view s);

/// Parses a finite double; returns false on any trailing garbage.
bool parse_double(std::string_view field, double& out);

/// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);

/// Writes to a temp file in the target directory, then renames into place.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// A numeric CSV keyed by a leading `date` column with strictly increasing
/// dates. Lines starting with `#` are skipped, so files carrying an embedded
/// config comment load cleanly.
struct DatedTable {
    std::vector<std::string> columns;  // excluding the date column
    std::vector<Date> dates;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws Error(missing_column) when absent.
    std::size_t column_index(std::string_view name) const;
    DatedSeries series(std::string_view column) const;
};

DatedTable load_dated_csv(const std::filesystem::path& path);

/// Convenience: one named column of a dated CSV as a series.
DatedSeries load_series(const std::filesystem::path& path, std::string_view column);

}  // namespace smkt::io
