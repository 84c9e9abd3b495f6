#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "core/error.hpp"
#include "core/synth.hpp"
#include "core/tls.hpp"
#include "core/windowing.hpp"

using namespace swd;

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mad_of(const std::vector<double>& v) {
    const double med = median_of(v);
    std::vector<double> dev(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) dev[i] = std::abs(v[i] - med);
    return median_of(dev);
}

} // namespace

TEST_CASE("an event-free spec yields pure background and no annotations") {
    SynthSpec spec;
    spec.seed = 11;
    const auto [rec, anns] = generate(spec);
    CHECK(rec.sample_rate_hz == 256.0);
    CHECK(rec.channels == std::vector<std::string>{"Cz"});
    CHECK(rec.sample_count == 2560); // 10 s at 256 Hz
    CHECK(anns.empty());
    // The trace must be exactly the background draw, untouched.
    const auto background = tls_sample(spec.background, 2560, spec.seed);
    CHECK(rec.channel_data(0) == background);
}

TEST_CASE("an event produces a matching annotation and a visible burst") {
    SynthSpec spec;
    spec.seed = 12;
    spec.events = {{2.0, 3.0, 3.0, 300.0}};
    const auto [rec, anns] = generate(spec);

    REQUIRE(anns.size() == 1);
    CHECK(anns[0].channel == "Cz");
    CHECK(anns[0].onset_s == 2.0);
    CHECK(anns[0].duration_s == 3.0);
    CHECK(anns[0].label == 1);

    // Amplitude inside the event dwarfs the background spread outside it.
    const auto trace = rec.channel_data(0);
    const std::vector<double> inside(trace.begin() + 512, trace.begin() + 1280);
    const std::vector<double> outside(trace.begin(), trace.begin() + 512);
    const double peak = *std::max_element(inside.begin(), inside.end());
    CHECK(peak >= 5.0 * mad_of(outside));
    CHECK(peak >= 250.0); // template peak 300 mV minus attenuated noise

    // Samples before the onset are bitwise the no-event background.
    SynthSpec quiet = spec;
    quiet.events.clear();
    const auto [bg_rec, bg_anns] = generate(quiet);
    const auto bg = bg_rec.channel_data(0);
    for (std::size_t i = 0; i < 512; ++i) CHECK(trace[i] == bg[i]);
    // Inside the event the background re-enters at one-tenth scale.
    for (std::size_t i = 512; i < 1280; ++i) CHECK(trace[i] != bg[i]);
}

TEST_CASE("generation is bitwise deterministic for a fixed seed") {
    SynthSpec spec;
    spec.seed = 77;
    spec.duration_s = 4.0;
    spec.events = {{0.5, 1.0, 2.5, 200.0}, {2.0, 1.5, 4.0, 350.0}};
    const auto [rec_a, anns_a] = generate(spec);
    const auto [rec_b, anns_b] = generate(spec);
    CHECK(rec_a.data == rec_b.data);
    CHECK(anns_a.size() == anns_b.size());

    SynthSpec other = spec;
    other.seed = 78;
    const auto [rec_c, anns_c] = generate(other);
    CHECK(rec_a.data != rec_c.data);
}

TEST_CASE("spec validation rejects impossible layouts") {
    SynthSpec spec;
    spec.events = {{2.0, 3.0, 3.0, 300.0}, {4.0, 1.0, 3.0, 300.0}};
    try {
        static_cast<void>(generate(spec));
        FAIL("expected overlapping_events");
    } catch (const error& e) {
        CHECK(e.code() == errc::overlapping_events);
    }

    spec.events = {{8.0, 5.0, 3.0, 300.0}}; // runs past the 10 s recording
    try {
        static_cast<void>(generate(spec));
        FAIL("expected event_out_of_range");
    } catch (const error& e) {
        CHECK(e.code() == errc::event_out_of_range);
    }

    spec.events = {{1.0, 2.0, -3.0, 300.0}};
    try {
        static_cast<void>(generate(spec));
        FAIL("expected invalid_params");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_params);
    }

    spec.events.clear();
    spec.duration_s = 0.0;
    try {
        static_cast<void>(generate(spec));
        FAIL("expected invalid_params");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_params);
    }

    spec = SynthSpec{};
    spec.channel = "bad name";
    try {
        static_cast<void>(generate(spec));
        FAIL("expected malformed_header");
    } catch (const error& e) {
        CHECK(e.code() == errc::malformed_header);
    }
}

TEST_CASE("adjacent events touching end-to-start are legal") {
    SynthSpec spec;
    spec.events = {{1.0, 2.0, 3.0, 300.0}, {3.0, 2.0, 3.0, 300.0}};
    const auto [rec, anns] = generate(spec);
    CHECK(anns.size() == 2);
}

TEST_CASE("fitted scale separates event windows from background windows") {
    // The acceptance-style layout in miniature: 8 s epochs whose middle
    // four seconds either carry a burst or do not. The fitted sigma of a
    // burst window should sit several times above the background sigma.
    int separated = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        SynthSpec spec;
        spec.duration_s = 8.0;
        spec.seed = 1000 + static_cast<std::uint64_t>(t);
        spec.events = {{2.0, 4.0, 3.0, 300.0}};
        const auto [rec, anns] = generate(spec);

        std::vector<double> event_sigmas, bg_sigmas;
        for (const auto& seg : segment_channel(rec, "Cz", {512})) {
            const auto report = fit_mle(seg.samples);
            const double span_start = static_cast<double>(seg.start_index) / 256.0;
            const bool is_event = span_start >= 2.0 && span_start < 6.0;
            (is_event ? event_sigmas : bg_sigmas).push_back(report.params.sigma);
        }
        REQUIRE_FALSE(event_sigmas.empty());
        REQUIRE_FALSE(bg_sigmas.empty());
        if (median_of(event_sigmas) >= 3.0 * median_of(bg_sigmas)) ++separated;
    }
    CHECK(separated >= 19);
}
