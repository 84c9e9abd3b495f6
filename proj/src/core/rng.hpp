#pragma once

#include <array>
#include <cstdint>

namespace swd {

// Philox4x32-10 counter-based pseudo-random generator (Salmon et al. 2011).
// The 64-bit seed is the key; the 128-bit block counter starts at zero and
// increments once per 4-word block. Identical seed, identical stream --
// streams can also be split by seed without coordination.
class Philox4x32 {
public:
    explicit Philox4x32(std::uint64_t seed);

    // Next raw 32-bit word of the stream.
    std::uint32_t next_u32();

    // Uniform double in the open interval (0, 1): two stream words form a
    // 53-bit integer m, the result is (m + 0.5) * 2^-53. Never 0 or 1, so
    // log(u) is always finite.
    double next_uniform();

    // Standard normal deviate via Box-Muller: sqrt(-2 ln u1) * cos(2 pi u2).
    // Consumes exactly two uniforms; the sine partner is discarded to keep
    // the stream layout one-deviate-per-two-uniforms.
    double next_normal();

    // Gamma(shape, scale=1) via Marsaglia-Tsang squeeze (rejection), with
    // the u^(1/a) boost for shape < 1.
    double next_gamma(double shape);

    // Chi-square(nu) = 2 * Gamma(nu/2).
    double next_chi_square(double nu);

    // Student-t(nu) deviate as Z / sqrt(V / nu), Z standard normal drawn
    // first, V chi-square(nu) drawn second.
    double next_student_t(double nu);

    // Raw block function, exposed for verification against published
    // known-answer vectors.
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;
};

} // namespace swd
