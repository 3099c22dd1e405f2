#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smkt {

/// Error classes surfaced by the toolkit. Each maps to a distinct process
/// exit code (see Error::exit_code) so scripted callers can branch on the
/// failure kind.
enum class errc {
    missing_input,
    missing_column,
    non_monotonic_dates,
    malformed_number,
    invalid_bar,
    empty_corpus,
    all_lines_malformed,
    invalid_ticker,
    malformed_line,
    score_out_of_range,
    too_short,
    zero_base,
    empty_intersection,
    zero_variance,
    singular_design,
    rank_deficient,
    not_aligned,
    invalid_degrees_of_freedom,
    missing_signals,
    no_overlapping_dates,
    too_few_rows,
    single_class,
    non_finite_feature,
    dimension_mismatch,
    empty_grid,
    invalid_argument,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

    /// Stable exit code for the CLI: 10 + enum index.
    int exit_code() const noexcept { return 10 + static_cast<int>(code_); }

private:
    errc code_;
};

}  // namespace smkt
