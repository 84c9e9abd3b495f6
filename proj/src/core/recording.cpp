#include "core/recording.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/text.hpp"

namespace swd {

namespace {

constexpr std::string_view kRatePrefix = "# sample_rate_hz=";

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::missing_file, "cannot open " + path);
    return in;
}

void check_unique_channels(const std::vector<std::string>& channels) {
    std::set<std::string_view> seen;
    for (const auto& name : channels) {
        if (!valid_channel_name(name))
            raise(errc::malformed_header, "invalid channel name '" + name + "'");
        if (!seen.insert(name).second)
            raise(errc::malformed_header, "duplicate channel name '" + name + "'");
    }
}

} // namespace

bool valid_channel_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',' || c == '#')
            return false;
    return true;
}

std::optional<std::size_t> Recording::channel_index(std::string_view name) const {
    for (std::size_t i = 0; i < channels.size(); ++i)
        if (channels[i] == name) return i;
    return std::nullopt;
}

std::vector<double> Recording::channel_data(std::size_t channel) const {
    std::vector<double> out(sample_count);
    for (std::size_t i = 0; i < sample_count; ++i)
        out[i] = data[i * channels.size() + channel];
    return out;
}

Recording make_recording(double sample_rate_hz, std::vector<std::string> channels,
                         std::vector<double> data_row_major, std::size_t sample_count) {
    if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz))
        raise(errc::non_positive_sample_rate,
              "sample rate must be positive and finite");
    if (channels.empty())
        raise(errc::malformed_header, "recording needs at least one channel");
    check_unique_channels(channels);
    if (sample_count == 0)
        raise(errc::empty_input, "recording needs at least one sample row");
    if (data_row_major.size() != sample_count * channels.size())
        raise(errc::inconsistent_row_width,
              "data size does not match rows x channels");
    for (double v : data_row_major)
        if (!std::isfinite(v))
            raise(errc::non_numeric_sample, "recording contains non-finite samples");

    Recording rec;
    rec.sample_rate_hz = sample_rate_hz;
    rec.channels = std::move(channels);
    rec.data = std::move(data_row_major);
    rec.sample_count = sample_count;
    return rec;
}

Recording load_recording(const std::string& path) {
    std::ifstream in = open_input(path);

    std::string line;
    if (!std::getline(in, line))
        raise(errc::malformed_header, path + ": empty file");
    std::string_view rate_line = trim(line);
    if (rate_line.substr(0, kRatePrefix.size()) != kRatePrefix)
        raise(errc::malformed_header,
              path + ": first line must be '# sample_rate_hz=<value>'");
    double rate = 0.0;
    if (!parse_double(rate_line.substr(kRatePrefix.size()), rate))
        raise(errc::malformed_header, path + ": unreadable sample rate");
    if (!(rate > 0.0) || !std::isfinite(rate))
        raise(errc::non_positive_sample_rate,
              path + ": sample rate must be positive, got " + format_double(rate));

    if (!std::getline(in, line))
        raise(errc::malformed_header, path + ": missing channel header");
    std::vector<std::string> channels;
    for (std::string_view token : split(trim(line), ','))
        channels.emplace_back(token);
    check_unique_channels(channels);
    const std::size_t width = channels.size();

    std::vector<double> data;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const std::string_view row = trim(line);
        if (row.empty()) continue;
        ++rows;
        const auto cells = split(row, ',');
        if (cells.size() != width)
            raise(errc::inconsistent_row_width,
                  path + ": row " + std::to_string(rows) + " has " +
                      std::to_string(cells.size()) + " columns, expected " +
                      std::to_string(width));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0.0;
            if (!parse_double(trim(cells[c]), v) || !std::isfinite(v))
                raise(errc::non_numeric_sample,
                      path + ": non-numeric sample at row " + std::to_string(rows) +
                          ", column " + std::to_string(c + 1));
            data.push_back(v);
        }
    }
    if (rows == 0)
        raise(errc::empty_input, path + ": no data rows");

    Recording rec;
    rec.sample_rate_hz = rate;
    rec.channels = std::move(channels);
    rec.data = std::move(data);
    rec.sample_count = rows;
    return rec;
}

void save_recording(const Recording& recording, const std::string& path) {
    std::ostringstream out;
    out << "# sample_rate_hz=" << format_double(recording.sample_rate_hz) << '\n';
    for (std::size_t c = 0; c < recording.channels.size(); ++c) {
        if (c) out << ',';
        out << recording.channels[c];
    }
    out << '\n';
    const std::size_t width = recording.channels.size();
    for (std::size_t r = 0; r < recording.sample_count; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c) out << ',';
            out << format_double(recording.data[r * width + c]);
        }
        out << '\n';
    }

    std::ofstream file(path, std::ios::trunc);
    if (!file)
        raise(errc::io_failure, "cannot write " + path);
    file << out.str();
    if (!file.flush())
        raise(errc::io_failure, "failed writing " + path);
}

std::vector<Annotation> load_annotations(const std::string& path) {
    std::ifstream in = open_input(path);

    std::vector<Annotation> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view record = trim(line);
        if (record.empty() || record.front() == '#') continue;

        const auto where = path + ": line " + std::to_string(line_no);
        const auto fields = split(record, ',');
        if (fields.size() != 4)
            raise(errc::malformed_line,
                  where + ": expected channel,onset_s,duration_s,label");

        Annotation ann;
        const std::string_view channel = trim(fields[0]);
        if (!valid_channel_name(channel))
            raise(errc::malformed_line, where + ": invalid channel name");
        ann.channel = std::string(channel);

        if (!parse_double(trim(fields[1]), ann.onset_s) || !std::isfinite(ann.onset_s))
            raise(errc::malformed_line, where + ": unreadable onset");
        if (ann.onset_s < 0.0)
            raise(errc::negative_onset, where + ": onset must be non-negative");

        if (!parse_double(trim(fields[2]), ann.duration_s) ||
            !std::isfinite(ann.duration_s) || !(ann.duration_s > 0.0))
            raise(errc::malformed_line, where + ": duration must be positive");

        long label = 0;
        if (!parse_long(trim(fields[3]), label) || (label != 0 && label != 1))
            raise(errc::unknown_label,
                  where + ": label must be 0 or 1");
        ann.label = static_cast<int>(label);
        out.push_back(std::move(ann));
    }
    return out;
}

void save_annotations(const std::vector<Annotation>& annotations, const std::string& path) {
    std::ofstream file(path, std::ios::trunc);
    if (!file)
        raise(errc::io_failure, "cannot write " + path);
    file << "# channel,onset_s,duration_s,label\n";
    for (const auto& ann : annotations)
        file << ann.channel << ',' << format_double(ann.onset_s) << ','
             << format_double(ann.duration_s) << ',' << ann.label << '\n';
    if (!file.flush())
        raise(errc::io_failure, "failed writing " + path);
}

void validate_annotations(const std::vector<Annotation>& annotations,
                          const Recording& recording) {
    const double duration = recording.duration_s();
    for (const auto& ann : annotations) {
        if (!recording.channel_index(ann.channel))
            raise(errc::unknown_channel,
                  "annotation references unknown channel '" + ann.channel + "'");
        if (ann.onset_s + ann.duration_s > duration)
            raise(errc::event_out_of_range,
                  "annotation on '" + ann.channel + "' at " + format_double(ann.onset_s) +
                      "s runs past the recording end");
    }
}

} // namespace swd
