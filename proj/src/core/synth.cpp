#include "core/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/text.hpp"

namespace swd {

namespace {

// Template value at cycle phase in [0, 1): a narrow triangular spike over
// the first tenth of the cycle followed by a half-sine slow wave.
double spike_wave(double phase) {
    constexpr double spike_width = 0.1;
    if (phase < spike_width) {
        const double half = 0.5 * spike_width;
        return phase < half ? phase / half : (spike_width - phase) / half;
    }
    return std::sin(std::numbers::pi * (phase - spike_width) / (1.0 - spike_width));
}

void validate(const SynthSpec& spec) {
    if (!(spec.sample_rate_hz > 0.0) || !std::isfinite(spec.sample_rate_hz))
        raise(errc::non_positive_sample_rate, "sample rate must be positive");
    if (!(spec.duration_s > 0.0) || !std::isfinite(spec.duration_s))
        raise(errc::invalid_params, "duration must be positive");
    if (!valid_channel_name(spec.channel))
        raise(errc::malformed_header, "invalid channel name '" + spec.channel + "'");
    if (!(spec.background.sigma > 0.0) || !(spec.background.nu > 0.0) ||
        !std::isfinite(spec.background.mu))
        raise(errc::invalid_params, "background parameters out of range");

    for (const auto& ev : spec.events) {
        if (!(ev.duration_s > 0.0) || !(ev.cycle_hz > 0.0) || !(ev.amplitude_mv > 0.0) ||
            !std::isfinite(ev.onset_s))
            raise(errc::invalid_params, "event fields must be positive and finite");
        if (ev.onset_s < 0.0 || ev.onset_s + ev.duration_s > spec.duration_s)
            raise(errc::event_out_of_range,
                  "event at " + format_double(ev.onset_s) + "s does not fit in " +
                      format_double(spec.duration_s) + "s");
    }

    std::vector<std::pair<double, double>> spans;
    spans.reserve(spec.events.size());
    for (const auto& ev : spec.events)
        spans.emplace_back(ev.onset_s, ev.onset_s + ev.duration_s);
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i)
        if (spans[i].first < spans[i - 1].second)
            raise(errc::overlapping_events,
                  "events at " + format_double(spans[i - 1].first) + "s and " +
                      format_double(spans[i].first) + "s overlap");
}

} // namespace

std::pair<Recording, std::vector<Annotation>> generate(const SynthSpec& spec) {
    validate(spec);

    const auto n = static_cast<std::size_t>(
        std::llround(spec.duration_s * spec.sample_rate_hz));
    if (n == 0)
        raise(errc::invalid_params, "duration shorter than one sample");

    std::vector<double> data = tls_sample(spec.background, n, spec.seed);

    for (const auto& ev : spec.events) {
        const auto first = static_cast<std::size_t>(
            std::llround(ev.onset_s * spec.sample_rate_hz));
        const auto last = std::min<std::size_t>(
            n, static_cast<std::size_t>(
                   std::llround((ev.onset_s + ev.duration_s) * spec.sample_rate_hz)));
        for (std::size_t i = first; i < last; ++i) {
            const double t = static_cast<double>(i - first) / spec.sample_rate_hz;
            const double phase = t * ev.cycle_hz - std::floor(t * ev.cycle_hz);
            data[i] = ev.amplitude_mv * spike_wave(phase) + 0.1 * data[i];
        }
    }

    std::vector<Annotation> annotations;
    annotations.reserve(spec.events.size());
    for (const auto& ev : spec.events)
        annotations.push_back({spec.channel, ev.onset_s, ev.duration_s, 1});

    Recording rec = make_recording(spec.sample_rate_hz, {spec.channel},
                                   std::move(data), n);
    return {std::move(rec), std::move(annotations)};
}

} // namespace swd
