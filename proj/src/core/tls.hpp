#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/nelder_mead.hpp"

namespace swd {

// Parameters of the t-location-scale density: Student's t with shape nu,
// translated by mu and rescaled by sigma. Doubles as the 3-D feature vector
// fed to the classifier.
struct TlsParams {
    double mu = 0.0;    // location (mV)
    double sigma = 1.0; // scale (mV), > 0
    double nu = 1.0;    // shape (dimensionless), > 0
};

struct FitReport {
    TlsParams params;
    double neg_log_likelihood = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct FitConfig {
    double tol_x = 1e-8;
    double tol_f = 1e-8;
    int max_iter = 0; // 0 selects the optimizer default of 200 * n
};

// Density of the t-location-scale distribution at x. Computed through the
// log form below, so large nu does not overflow the Gamma factors.
double tls_pdf(double x, const TlsParams& params);

// Log-density: lgamma((nu+1)/2) - lgamma(nu/2) - ln(sigma * sqrt(nu * pi))
// - (nu+1)/2 * log1p(z^2 / nu) with z = (x - mu) / sigma. Finite for
// |z| up to at least 1e150.
double tls_log_pdf(double x, const TlsParams& params);

// Negative log-likelihood of a sample, -sum_i tls_log_pdf(x_i). The shared
// Gamma terms are factored out and the per-sample terms are summed pairwise.
double neg_log_likelihood(std::span<const double> samples, const TlsParams& params);

// Maximum-likelihood fit via Nelder-Mead over the unconstrained triple
// (mu, ln sigma, ln nu). Starting point: median, 1.4826 * MAD, and a shape
// guess moment-matched from the sample's excess kurtosis. nu is capped at
// 1e6 during the search; beyond that the density is numerically normal.
FitReport fit_mle(std::span<const double> samples, const FitConfig& config = {});

// Deterministic sampling: mu + sigma * T with T = Z / sqrt(V / nu), Z
// standard normal and V chi-square(nu), drawn from Philox4x32-10 keyed by
// the seed. Identical (params, count, seed) gives identical output.
std::vector<double> tls_sample(const TlsParams& params, std::size_t count, std::uint64_t seed);

// Shape cap applied during fitting.
inline constexpr double kMaxFittedNu = 1e6;

namespace detail {
// Pairwise (recursive halving) summation.
double pairwise_sum(std::span<const double> values);
} // namespace detail

} // namespace swd
