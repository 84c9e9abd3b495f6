#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/tls.hpp"
#include "util.hpp"

using namespace swd;

namespace {

// Reference values computed with 40-digit arithmetic and rounded to double.
struct PdfCase {
    double x;
    TlsParams params;
    double expected;
};

const PdfCase kPdfCases[] = {
    {0.0, {0.0, 1.0, 1.0}, 0.3183098861837906715},       // 1 / pi (Cauchy mode)
    {0.0, {0.0, 1.0, 5.0}, 0.37960668982249443119},
    {1.5, {0.0, 1.0, 0.5}, 0.075088039409177246926},
    {-2.25, {0.0, 1.0, 2.0}, 0.053279765996947103306},
    {3.5, {2.0, 0.5, 4.0}, 0.039386996181673073753},
    {0.0, {0.0, 1.0, 30.0}, 0.39563218489409775803},
};

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("density matches high-precision reference values") {
    for (const auto& c : kPdfCases) {
        CAPTURE(c.x);
        CAPTURE(c.params.nu);
        CHECK(rel_err(tls_pdf(c.x, c.params), c.expected) < 1e-13);
    }
    CHECK(rel_err(tls_pdf(0.0, {0.0, 1.0, 1.0}), 1.0 / M_PI) < 1e-15);
}

TEST_CASE("log-density stays finite and accurate into the extreme tail") {
    const TlsParams p{0.0, 1.0, 3.0};
    CHECK(rel_err(tls_log_pdf(1e100, p), -919.83770146990556393) < 1e-13);
    CHECK(rel_err(tls_log_pdf(1e150, p), -1380.3547200687147007) < 1e-13);
    CHECK(std::isfinite(tls_log_pdf(1e300, p)));
}

TEST_CASE("pdf is the exponential of the log-density") {
    const TlsParams p{1.0, 2.0, 7.5};
    for (double x : {-50.0, -3.0, 0.0, 1.0, 2.5, 80.0})
        CHECK(tls_pdf(x, p) == std::exp(tls_log_pdf(x, p)));
}

TEST_CASE("density is symmetric about the location") {
    const TlsParams p{4.0, 1.5, 2.5};
    for (double d : {0.25, 1.0, 3.75, 20.0})
        CHECK(tls_pdf(p.mu + d, p) == tls_pdf(p.mu - d, p));
}

TEST_CASE("location-scale change of variables holds") {
    const TlsParams standard{0.0, 1.0, 3.5};
    const TlsParams shifted{2.0, 0.25, 3.5};
    for (double x : {1.0, 1.9, 2.0, 2.6, 5.0}) {
        const double z = (x - shifted.mu) / shifted.sigma;
        CHECK(rel_err(tls_pdf(x, shifted), tls_pdf(z, standard) / shifted.sigma) < 1e-12);
    }
}

TEST_CASE("nu = 1 recovers the Cauchy density") {
    const TlsParams p{0.0, 1.0, 1.0};
    for (double x : {-8.0, -1.0, 0.0, 0.5, 3.0, 42.0}) {
        const double cauchy = 1.0 / (M_PI * (1.0 + x * x));
        CHECK(rel_err(tls_pdf(x, p), cauchy) < 1e-12);
    }
}

TEST_CASE("huge nu is indistinguishable from the normal density") {
    const TlsParams p{0.0, 1.0, 1e6};
    for (double x = -5.0; x <= 5.0; x += 0.5) {
        const double normal = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
        CHECK(std::abs(tls_pdf(x, p) - normal) < 1e-5);
    }
}

TEST_CASE("density integrates to one over a wide interval") {
    // Masses over [-L, L] with L = 60 * max(1, sqrt(nu)), to 25 digits.
    const struct {
        double nu;
        double mass;
    } cases[] = {
        {0.5, 0.91719708918733467075},
        {1.0, 0.98939065273475345891},
        {2.0, 0.99986114003959996433},
        {5.0, 0.99999999956362071625},
        {30.0, 1.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.nu);
        const TlsParams p{0.0, 1.0, c.nu};
        const double half_width = 60.0 * std::max(1.0, std::sqrt(c.nu));
        const double mass =
            testutil::integrate([&](double x) { return tls_pdf(x, p); }, -half_width, half_width);
        CHECK(std::abs(mass - c.mass) < 2e-6);
    }
}

TEST_CASE("negative log-likelihood matches a hand-checked value") {
    const std::vector<double> xs{-1.0, 0.0, 1.0};
    CHECK(rel_err(neg_log_likelihood(xs, {0.0, 1.0, 2.0}), 4.3355576368442470383) < 1e-14);
}

TEST_CASE("single-point likelihood at the Cauchy mode is ln(pi)") {
    const std::vector<double> xs{0.0};
    CHECK(rel_err(neg_log_likelihood(xs, {0.0, 1.0, 1.0}), std::log(M_PI)) < 1e-15);
}

TEST_CASE("concatenating a sample with itself exactly doubles the likelihood") {
    const TlsParams p{0.3, 1.7, 2.2};
    for (std::size_t n : {std::size_t{8}, std::size_t{13}}) {
        std::vector<double> xs = tls_sample(p, n, 99);
        std::vector<double> twice(xs);
        twice.insert(twice.end(), xs.begin(), xs.end());
        CHECK(neg_log_likelihood(twice, p) == 2.0 * neg_log_likelihood(xs, p));
    }
}

TEST_CASE("parameter validation rejects bad inputs") {
    CHECK_THROWS_AS(static_cast<void>(tls_pdf(0.0, {0.0, 0.0, 1.0})), error); // sigma = 0
    CHECK_THROWS_AS(static_cast<void>(tls_pdf(0.0, {0.0, 1.0, -1.0})), error);
    CHECK_THROWS_AS(static_cast<void>(tls_pdf(0.0, {std::nan(""), 1.0, 1.0})), error);
    try {
        static_cast<void>(tls_pdf(0.0, {0.0, -2.0, 1.0}));
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_params);
    }
    const std::vector<double> empty;
    CHECK_THROWS_AS(static_cast<void>(neg_log_likelihood(empty, {0.0, 1.0, 1.0})), error);
}

TEST_CASE("fitting a 10k-point synthetic sample recovers the parameters") {
    const TlsParams truth{2.0, 0.5, 4.0};
    const std::vector<double> xs = tls_sample(truth, 10000, 41);
    const FitReport report = fit_mle(xs);
    CHECK(report.converged);
    CHECK(report.params.mu > 1.9);
    CHECK(report.params.mu < 2.1);
    CHECK(report.params.sigma > 0.45);
    CHECK(report.params.sigma < 0.55);
    CHECK(report.params.nu > 3.0);
    CHECK(report.params.nu < 5.5);

    // The fit should sit at a stationary point: central finite differences of
    // the likelihood in each coordinate, scaled, must be small.
    const double base = report.neg_log_likelihood;
    CHECK(rel_err(base, neg_log_likelihood(xs, report.params)) < 1e-12);
    const double scale = std::max(1.0, std::abs(base));
    const double p0[3] = {report.params.mu, report.params.sigma, report.params.nu};
    for (int i = 0; i < 3; ++i) {
        const double h = 1e-5 * std::max(1.0, std::abs(p0[i]));
        double lo[3] = {p0[0], p0[1], p0[2]};
        double hi[3] = {p0[0], p0[1], p0[2]};
        lo[i] -= h;
        hi[i] += h;
        const double grad = (neg_log_likelihood(xs, {hi[0], hi[1], hi[2]}) -
                             neg_log_likelihood(xs, {lo[0], lo[1], lo[2]})) /
                            (2.0 * h);
        CAPTURE(i);
        CHECK(std::abs(grad) / scale < 1e-3);
    }
}

TEST_CASE("fitting gaussian data drives nu toward the normal regime") {
    Philox4x32 rng(7);
    std::vector<double> xs(10000);
    for (double& x : xs) x = rng.next_normal();
    const FitReport report = fit_mle(xs);
    CHECK(report.params.nu >= 20.0);
    CHECK(std::abs(report.params.mu) < 0.1);
    CHECK(std::abs(report.params.sigma - 1.0) < 0.1);
}

TEST_CASE("the fit is equivariant under affine maps of the data") {
    const std::vector<double> xs = tls_sample({0.0, 1.0, 5.0}, 4000, 123);
    const double a = 2.5, b = -7.0;
    std::vector<double> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = a * xs[i] + b;

    const FitReport fx = fit_mle(xs);
    const FitReport fy = fit_mle(ys);
    CHECK(std::abs(fy.params.mu - (a * fx.params.mu + b)) < 1e-3);
    CHECK(std::abs(fy.params.sigma - a * fx.params.sigma) < 1e-3);
    CHECK(std::abs(fy.params.nu - fx.params.nu) / fx.params.nu < 1e-3);
}

TEST_CASE("fit input validation") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(static_cast<void>(fit_mle(empty)), error);
    try {
        static_cast<void>(fit_mle(empty));
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_sample);
    }

    const std::vector<double> seven(7, 1.0);
    try {
        static_cast<void>(fit_mle(seven));
        FAIL("expected too_few_samples");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_few_samples);
    }

    const std::vector<double> constant(64, 3.25);
    try {
        static_cast<void>(fit_mle(constant));
        FAIL("expected degenerate_sample");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_sample);
    }

    std::vector<double> with_nan(16, 0.5);
    with_nan[9] = std::nan("");
    try {
        static_cast<void>(fit_mle(with_nan));
        FAIL("expected invalid_params");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_params);
    }
}

TEST_CASE("sampling is deterministic in the seed") {
    const TlsParams p{1.0, 2.0, 3.0};
    const auto a = tls_sample(p, 512, 2024);
    const auto b = tls_sample(p, 512, 2024);
    const auto c = tls_sample(p, 512, 2025);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("sample location tracks mu") {
    auto xs = tls_sample({10.0, 1.0, 3.0}, 100000, 5);
    std::sort(xs.begin(), xs.end());
    const double median = 0.5 * (xs[49999] + xs[50000]);
    CHECK(std::abs(median - 10.0) < 0.05);
}

TEST_CASE("standard Cauchy draws straddle the quartiles") {
    // For nu = 1 the quartiles are at -1 and +1, so half the mass lies
    // outside [-1, 1].
    const auto xs = tls_sample({0.0, 1.0, 1.0}, 100000, 6);
    std::size_t outside = 0;
    for (double x : xs) outside += std::abs(x) > 1.0;
    const double frac = static_cast<double>(outside) / static_cast<double>(xs.size());
    CHECK(std::abs(frac - 0.5) < 0.01);
}

TEST_CASE("sampling zero points is an error") {
    try {
        static_cast<void>(tls_sample({0.0, 1.0, 1.0}, 0, 1));
        FAIL("expected invalid_params");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_params);
    }
}
