#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/recording.hpp"

namespace swd {

// One channel's contiguous sample window, the unit of feature extraction.
struct Segment {
    std::string channel;
    std::size_t start_index = 0; // samples; always a multiple of the window length
    std::vector<double> samples; // exactly window_len_samples entries
};

struct WindowSpec {
    std::size_t window_len_samples = 256; // 1 s at 256 Hz
};

// Fewer than 8 points cannot support a 3-parameter fit.
inline constexpr std::size_t kMinWindowSamples = 8;

// Tile one channel into floor(N/W) non-overlapping windows [i*W, (i+1)*W);
// tail samples shorter than W are discarded. Throws unknown_channel,
// window_too_small, or window_larger_than_signal.
std::vector<Segment> segment_channel(const Recording& recording,
                                     const std::string& channel,
                                     const WindowSpec& spec);

// Label 1 iff the fraction of the segment's time span covered by label-1
// annotations on the same channel reaches overlap_threshold; else 0.
// Overlapping annotation intervals are merged before measuring coverage.
int label_segment(const Segment& segment,
                  const std::vector<Annotation>& annotations,
                  double sample_rate_hz, double overlap_threshold);

} // namespace swd
