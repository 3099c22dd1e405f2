#include "smkt/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "smkt/errors.hpp"

namespace smkt::io {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) return false;
    return std::isfinite(out);
}

std::string format_double(double v) {
    char buf[32];
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return std::string(buf);
    }
    // Shortest representation that parses back to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return std::string(buf);
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::missing_input, "cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    const auto dir = path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(errc::io_error, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(errc::io_error, "short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::size_t DatedTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw Error(errc::missing_column, "no column named '" + std::string(name) + "'");
}

DatedSeries DatedTable::series(std::string_view column) const {
    const std::size_t col = column_index(column);
    DatedSeries s;
    s.dates = dates;
    s.values.reserve(rows.size());
    for (const auto& row : rows) s.values.push_back(row[col]);
    s.validate();
    return s;
}

DatedTable load_dated_csv(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    DatedTable table;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool have_header = false;
    while (pos < content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string::npos) end = content.size();
        std::string_view line = trim(std::string_view(content).substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_csv_line(line);
        if (!have_header) {
            if (fields.empty() || trim(fields[0]) != "date") {
                throw Error(errc::missing_column, path.string() + ": first column must be 'date'");
            }
            for (std::size_t i = 1; i < fields.size(); ++i) {
                table.columns.emplace_back(trim(fields[i]));
            }
            have_header = true;
            continue;
        }
        if (fields.size() != table.columns.size() + 1) {
            throw Error(errc::malformed_line,
                        path.string() + ": wrong field count at line " + std::to_string(line_no));
        }
        const auto date = Date::parse(trim(fields[0]));
        if (!date) {
            throw Error(errc::malformed_line,
                        path.string() + ": bad date at line " + std::to_string(line_no));
        }
        if (!table.dates.empty() && !(table.dates.back() < *date)) {
            throw Error(errc::non_monotonic_dates,
                        path.string() + ": dates must strictly increase at line " +
                            std::to_string(line_no));
        }
        std::vector<double> row(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (!parse_double(fields[i + 1], row[i])) {
                throw Error(errc::malformed_number, path.string() + ": bad number at line " +
                                                        std::to_string(line_no));
            }
        }
        table.dates.push_back(*date);
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw Error(errc::missing_column, path.string() + ": no header row");
    return table;
}

DatedSeries load_series(const std::filesystem::path& path, std::string_view column) {
    return load_dated_csv(path).series(column);
}

}  // namespace smkt::io
