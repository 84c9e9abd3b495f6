#include "core/tls.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace swd {

namespace {

void validate_params(const TlsParams& p) {
    if (!std::isfinite(p.mu) || !std::isfinite(p.sigma) || !std::isfinite(p.nu))
        raise(errc::invalid_params, "t-location-scale parameters must be finite");
    if (!(p.sigma > 0.0))
        raise(errc::invalid_params, "scale parameter sigma must be > 0");
    if (!(p.nu > 0.0))
        raise(errc::invalid_params, "shape parameter nu must be > 0");
}

// ln of the normalization constant, without the 1/sigma factor:
// lgamma((nu+1)/2) - lgamma(nu/2) - 0.5 * ln(nu * pi).
inline double log_norm_constant(double nu) {
    return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
           0.5 * std::log(nu * M_PI);
}

// log1p(z^2 / nu), falling back to the tail asymptote when z^2 overflows.
inline double log_kernel(double z, double nu) {
    const double t = z * z / nu;
    if (std::isfinite(t)) return std::log1p(t);
    return 2.0 * (std::log(std::abs(z)) - 0.5 * std::log(nu));
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

namespace detail {

double pairwise_sum(std::span<const double> values) {
    switch (values.size()) {
    case 0: return 0.0;
    case 1: return values[0];
    case 2: return values[0] + values[1];
    default: break;
    }
    const std::size_t mid = values.size() / 2;
    return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

} // namespace detail

double tls_log_pdf(double x, const TlsParams& params) {
    validate_params(params);
    const double z = (x - params.mu) / params.sigma;
    return log_norm_constant(params.nu) - std::log(params.sigma) -
           0.5 * (params.nu + 1.0) * log_kernel(z, params.nu);
}

double tls_pdf(double x, const TlsParams& params) {
    return std::exp(tls_log_pdf(x, params));
}

double neg_log_likelihood(std::span<const double> samples, const TlsParams& params) {
    if (samples.empty())
        raise(errc::empty_sample, "negative log-likelihood of an empty sample");
    validate_params(params);

    const double n = static_cast<double>(samples.size());
    std::vector<double> kernels(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        kernels[i] = log_kernel((samples[i] - params.mu) / params.sigma, params.nu);

    const double constant = std::log(params.sigma) - log_norm_constant(params.nu);
    return n * constant + 0.5 * (params.nu + 1.0) * detail::pairwise_sum(kernels);
}

FitReport fit_mle(std::span<const double> samples, const FitConfig& config) {
    if (samples.empty())
        raise(errc::empty_sample, "cannot fit an empty sample");
    if (samples.size() < 8)
        raise(errc::too_few_samples,
              "need at least 8 samples to fit 3 parameters, got " +
                  std::to_string(samples.size()));
    for (double x : samples)
        if (!std::isfinite(x))
            raise(errc::invalid_params, "sample contains non-finite values");

    std::vector<double> data(samples.begin(), samples.end());
    const double n = static_cast<double>(data.size());
    const double med = median_of(data);

    double mean = 0.0;
    for (double x : data) mean += x;
    mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double x : data) {
        const double d = x - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    const double sd = std::sqrt(m2 / (n - 1.0));
    if (sd < 1e-12 * std::max(1.0, std::abs(med)))
        raise(errc::degenerate_sample,
              "sample spread too small for a scale estimate");

    std::vector<double> abs_dev(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) abs_dev[i] = std::abs(data[i] - med);
    const double mad = median_of(std::move(abs_dev));
    const double sigma0 = mad > 0.0 ? 1.4826 * mad : sd;

    m2 /= n;
    m4 /= n;
    const double excess_kurtosis = m4 / (m2 * m2) - 3.0;
    double nu0 = 3.0;
    if (excess_kurtosis > 0.1)
        nu0 = std::clamp(4.0 + 6.0 / excess_kurtosis, 0.6, 100.0);

    const auto objective = [&](std::span<const double> theta) {
        TlsParams p;
        p.mu = theta[0];
        p.sigma = std::max(std::exp(theta[1]), 1e-300);
        p.nu = std::clamp(std::exp(theta[2]), 1e-300, kMaxFittedNu);
        return neg_log_likelihood(data, p);
    };

    SimplexConfig simplex_config;
    simplex_config.tol_x = config.tol_x;
    simplex_config.tol_f = config.tol_f;
    simplex_config.max_iter = config.max_iter;

    const double theta0[3] = {med, std::log(sigma0), std::log(nu0)};
    const MinimizeResult min = nelder_mead(objective, theta0, simplex_config);

    FitReport report;
    report.params.mu = min.x_min[0];
    report.params.sigma = std::max(std::exp(min.x_min[1]), 1e-300);
    report.params.nu = std::clamp(std::exp(min.x_min[2]), 1e-300, kMaxFittedNu);
    report.neg_log_likelihood = min.f_min;
    report.iterations = min.iterations;
    report.converged = min.converged;
    return report;
}

std::vector<double> tls_sample(const TlsParams& params, std::size_t count, std::uint64_t seed) {
    validate_params(params);
    if (count == 0)
        raise(errc::invalid_params, "sample count must be at least 1");

    Philox4x32 rng(seed);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = params.mu + params.sigma * rng.next_student_t(params.nu);
    return out;
}

} // namespace swd
