#pragma once

#include <stdexcept>
#include <string>

namespace swd {

// Error kinds surfaced by the toolkit. Each maps 1:1 onto a status code of
// the public C API.
enum class errc {
    ok = 0,
    // recording / annotation / model files
    missing_file,
    malformed_header,
    non_numeric_sample,
    inconsistent_row_width,
    non_positive_sample_rate,
    malformed_line,
    unknown_label,
    negative_onset,
    io_failure,
    empty_dataset,
    unsupported_version,
    schema_violation,
    // windowing
    unknown_channel,
    window_larger_than_signal,
    window_too_small,
    // density / fitting
    invalid_params,
    empty_sample,
    too_few_samples,
    degenerate_sample,
    // optimizer
    non_finite_objective,
    // classifier
    zero_variance_dimension,
    k_too_large,
    non_finite_query,
    // metrics
    length_mismatch,
    empty_input,
    // synthesis
    overlapping_events,
    event_out_of_range,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, std::string message) {
    throw error(code, std::move(message));
}

} // namespace swd
