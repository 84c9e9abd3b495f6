#include "core/rng.hpp"

#include <cmath>

namespace swd {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace

Philox4x32::Philox4x32(std::uint64_t seed)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mul_hi_lo(kMul0, c[0], hi0, lo0);
        mul_hi_lo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

void Philox4x32::refill() {
    buffer_ = block(counter_, key_);
    buffered_ = 4;
    for (int i = 0; i < 4; ++i) {
        if (++counter_[i] != 0) break; // 128-bit increment with carry
    }
}

std::uint32_t Philox4x32::next_u32() {
    if (buffered_ == 0) refill();
    return buffer_[4 - buffered_--];
}

double Philox4x32::next_uniform() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    const std::uint64_t m = ((hi << 32) | lo) >> 11; // 53 bits
    return (static_cast<double>(m) + 0.5) * 0x1.0p-53;
}

double Philox4x32::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Philox4x32::next_gamma(double shape) {
    if (shape < 1.0) {
        const double g = next_gamma(shape + 1.0);
        const double u = next_uniform();
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double Philox4x32::next_chi_square(double nu) {
    return 2.0 * next_gamma(0.5 * nu);
}

double Philox4x32::next_student_t(double nu) {
    const double z = next_normal();
    const double v = next_chi_square(nu);
    return z / std::sqrt(v / nu);
}

} // namespace swd
