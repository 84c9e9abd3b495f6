#include "core/error.hpp"

namespace swd {

const char* errc_name(errc code) {
    switch (code) {
    case errc::ok: return "ok";
    case errc::missing_file: return "missing_file";
    case errc::malformed_header: return "malformed_header";
    case errc::non_numeric_sample: return "non_numeric_sample";
    case errc::inconsistent_row_width: return "inconsistent_row_width";
    case errc::non_positive_sample_rate: return "non_positive_sample_rate";
    case errc::malformed_line: return "malformed_line";
    case errc::unknown_label: return "unknown_label";
    case errc::negative_onset: return "negative_onset";
    case errc::io_failure: return "io_failure";
    case errc::empty_dataset: return "empty_dataset";
    case errc::unsupported_version: return "unsupported_version";
    case errc::schema_violation: return "schema_violation";
    case errc::unknown_channel: return "unknown_channel";
    case errc::window_larger_than_signal: return "window_larger_than_signal";
    case errc::window_too_small: return "window_too_small";
    case errc::invalid_params: return "invalid_params";
    case errc::empty_sample: return "empty_sample";
    case errc::too_few_samples: return "too_few_samples";
    case errc::degenerate_sample: return "degenerate_sample";
    case errc::non_finite_objective: return "non_finite_objective";
    case errc::zero_variance_dimension: return "zero_variance_dimension";
    case errc::k_too_large: return "k_too_large";
    case errc::non_finite_query: return "non_finite_query";
    case errc::length_mismatch: return "length_mismatch";
    case errc::empty_input: return "empty_input";
    case errc::overlapping_events: return "overlapping_events";
    case errc::event_out_of_range: return "event_out_of_range";
    }
    return "unknown";
}

} // namespace swd
