#include "smkt/errors.hpp"

namespace smkt {

const char* errc_name(errc code) {
    switch (code) {
        case errc::missing_input: return "MissingInput";
        case errc::missing_column: return "MissingColumn";
        case errc::non_monotonic_dates: return "NonMonotonicDates";
        case errc::malformed_number: return "MalformedNumber";
        case errc::invalid_bar: return "InvalidBar";
        case errc::empty_corpus: return "EmptyCorpus";
        case errc::all_lines_malformed: return "AllLinesMalformed";
        case errc::invalid_ticker: return "InvalidTicker";
        case errc::malformed_line: return "MalformedLine";
        case errc::score_out_of_range: return "ScoreOutOfRange";
        case errc::too_short: return "TooShort";
        case errc::zero_base: return "ZeroBase";
        case errc::empty_intersection: return "EmptyIntersection";
        case errc::zero_variance: return "ZeroVariance";
        case errc::singular_design: return "SingularDesign";
        case errc::rank_deficient: return "RankDeficient";
        case errc::not_aligned: return "NotAligned";
        case errc::invalid_degrees_of_freedom: return "InvalidDegreesOfFreedom";
        case errc::missing_signals: return "MissingSignals";
        case errc::no_overlapping_dates: return "NoOverlappingDates";
        case errc::too_few_rows: return "TooFewRows";
        case errc::single_class: return "SingleClass";
        case errc::non_finite_feature: return "NonFiniteFeature";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::empty_grid: return "EmptyGrid";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace smkt
