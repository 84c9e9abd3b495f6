#include "core/windowing.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace swd {

std::vector<Segment> segment_channel(const Recording& recording,
                                     const std::string& channel,
                                     const WindowSpec& spec) {
    const auto column = recording.channel_index(channel);
    if (!column)
        raise(errc::unknown_channel, "no channel named '" + channel + "'");

    const std::size_t w = spec.window_len_samples;
    if (w < kMinWindowSamples)
        raise(errc::window_too_small,
              "window of " + std::to_string(w) + " samples is below the minimum of " +
                  std::to_string(kMinWindowSamples));
    if (w > recording.sample_count)
        raise(errc::window_larger_than_signal,
              "window of " + std::to_string(w) + " samples exceeds signal length " +
                  std::to_string(recording.sample_count));

    const std::size_t width = recording.channel_count();
    const std::size_t count = recording.sample_count / w;
    std::vector<Segment> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Segment seg;
        seg.channel = channel;
        seg.start_index = i * w;
        seg.samples.resize(w);
        for (std::size_t j = 0; j < w; ++j)
            seg.samples[j] = recording.data[(seg.start_index + j) * width + *column];
        out.push_back(std::move(seg));
    }
    return out;
}

int label_segment(const Segment& segment,
                  const std::vector<Annotation>& annotations,
                  double sample_rate_hz, double overlap_threshold) {
    const double seg_start = static_cast<double>(segment.start_index) / sample_rate_hz;
    const double seg_end =
        static_cast<double>(segment.start_index + segment.samples.size()) / sample_rate_hz;

    // Clip every label-1 annotation on this channel to the segment span.
    std::vector<std::pair<double, double>> spans;
    for (const auto& ann : annotations) {
        if (ann.label != 1 || ann.channel != segment.channel) continue;
        const double lo = std::max(ann.onset_s, seg_start);
        const double hi = std::min(ann.onset_s + ann.duration_s, seg_end);
        if (hi > lo) spans.emplace_back(lo, hi);
    }
    if (spans.empty()) return 0;

    // Measure the union so stacked annotations are not double-counted.
    std::sort(spans.begin(), spans.end());
    double covered = 0.0;
    double cur_lo = spans.front().first;
    double cur_hi = spans.front().second;
    for (std::size_t i = 1; i < spans.size(); ++i) {
        if (spans[i].first > cur_hi) {
            covered += cur_hi - cur_lo;
            cur_lo = spans[i].first;
            cur_hi = spans[i].second;
        } else {
            cur_hi = std::max(cur_hi, spans[i].second);
        }
    }
    covered += cur_hi - cur_lo;

    return covered / (seg_end - seg_start) >= overlap_threshold ? 1 : 0;
}

} // namespace swd
