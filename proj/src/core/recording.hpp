#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swd {

// Multichannel sampled signal: N time rows by M channel columns, row-major,
// with a common sample rate. Immutable after construction.
struct Recording {
    double sample_rate_hz = 0.0;
    std::vector<std::string> channels;
    std::vector<double> data; // N * M, row-major
    std::size_t sample_count = 0;

    std::size_t channel_count() const { return channels.size(); }
    double duration_s() const {
        return static_cast<double>(sample_count) / sample_rate_hz;
    }
    double sample(std::size_t row, std::size_t channel) const {
        return data[row * channels.size() + channel];
    }
    std::optional<std::size_t> channel_index(std::string_view name) const;
    std::vector<double> channel_data(std::size_t channel) const;
};

// Expert event mark bound to a single channel; events spanning channels are
// one annotation per channel.
struct Annotation {
    std::string channel;
    double onset_s = 0.0;
    double duration_s = 0.0;
    int label = 0; // 1 = spike-and-wave, 0 = non-spike-and-wave
};

bool valid_channel_name(std::string_view name);

// Validates every invariant (rectangular data, positive rate, finite
// samples, unique channel names) and assembles a Recording.
Recording make_recording(double sample_rate_hz, std::vector<std::string> channels,
                         std::vector<double> data_row_major, std::size_t sample_count);

// Recording CSV: line 1 "# sample_rate_hz=<value>", line 2 channel names,
// then one comma-separated row of amplitudes per time instant.
Recording load_recording(const std::string& path);
void save_recording(const Recording& recording, const std::string& path);

// Annotation CSV: "channel,onset_s,duration_s,label" records; lines starting
// with '#' and blank lines are ignored.
std::vector<Annotation> load_annotations(const std::string& path);
void save_annotations(const std::vector<Annotation>& annotations, const std::string& path);

// Checks annotations against a recording: known channel, event inside the
// recorded time span.
void validate_annotations(const std::vector<Annotation>& annotations,
                          const Recording& recording);

} // namespace swd
