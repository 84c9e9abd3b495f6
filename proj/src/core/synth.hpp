#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/recording.hpp"
#include "core/tls.hpp"

namespace swd {

// One synthetic spike-and-wave burst: a repeating spike-plus-half-sine
// template at cycle_hz, scaled to amplitude_mv.
struct SynthEvent {
    double onset_s = 0.0;
    double duration_s = 0.0;
    double cycle_hz = 3.0;      // generalized SWD band is roughly 2.5-4.5 Hz
    double amplitude_mv = 300.0;
};

struct SynthSpec {
    double sample_rate_hz = 256.0;
    double duration_s = 10.0;
    std::string channel = "Cz";
    std::vector<SynthEvent> events;
    TlsParams background{0.0, 20.0, 4.0}; // heavy-tailed EEG-like noise floor
    std::uint64_t seed = 0;
};

// Deterministic synthetic recording with exact ground-truth annotations.
// Background samples come from tls_sample(spec.background, ..., spec.seed);
// inside each event the trace is the template plus background at one-tenth
// scale. Identical spec gives bitwise-identical output. Throws
// invalid_params, overlapping_events, or event_out_of_range.
std::pair<Recording, std::vector<Annotation>> generate(const SynthSpec& spec);

} // namespace swd
