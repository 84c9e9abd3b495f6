#include "core/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/error.hpp"

namespace swd {

namespace {

void validate_config(const SimplexConfig& cfg) {
    if (!(cfg.tol_x > 0.0) || !(cfg.tol_f > 0.0))
        raise(errc::invalid_params, "simplex tolerances must be positive");
    if (cfg.max_iter < 0)
        raise(errc::invalid_params, "max_iter must be non-negative");
    if (!(cfg.reflection > 0.0) || !(cfg.expansion > 1.0) ||
        !(cfg.contraction > 0.0) || !(cfg.contraction < 1.0) ||
        !(cfg.shrink > 0.0) || !(cfg.shrink < 1.0))
        raise(errc::invalid_params, "simplex coefficients outside admissible ranges");
}

// NaN from the objective mid-run orders the vertex worst; the search stays
// inside the finite region.
inline double sanitize(double f) {
    return std::isnan(f) ? std::numeric_limits<double>::infinity() : f;
}

} // namespace

MinimizeResult nelder_mead_from_simplex(const Objective& objective,
                                        std::vector<std::vector<double>> simplex,
                                        const SimplexConfig& config,
                                        const IterationObserver& observer) {
    validate_config(config);
    if (simplex.size() < 2)
        raise(errc::invalid_params, "simplex needs at least two vertices");
    const std::size_t n = simplex.size() - 1;
    for (const auto& v : simplex)
        if (v.size() != n)
            raise(errc::invalid_params, "simplex must hold n + 1 vertices in R^n");

    const int max_iter = config.max_iter > 0 ? config.max_iter
                                             : static_cast<int>(200 * n);

    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = objective(simplex[i]);
        if (!std::isfinite(values[i]))
            raise(errc::non_finite_objective,
                  "objective not finite at initial simplex vertex " + std::to_string(i));
    }

    // Stable sort on value keeps insertion order on exact ties, so runs are
    // reproducible.
    auto sort_simplex = [&] {
        std::vector<std::size_t> order(n + 1);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> sorted_v(n + 1);
        std::vector<double> sorted_f(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            sorted_v[i] = std::move(simplex[order[i]]);
            sorted_f[i] = values[order[i]];
        }
        simplex = std::move(sorted_v);
        values = std::move(sorted_f);
    };
    sort_simplex();

    std::vector<double> best_x = simplex[0];
    double best_f = values[0];

    auto converged_now = [&] {
        double dx = 0.0, df = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                dx = std::max(dx, std::abs(simplex[i][j] - simplex[0][j]));
            df = std::max(df, std::abs(values[i] - values[0]));
        }
        return dx < config.tol_x && df < config.tol_f;
    };

    MinimizeResult result;
    int iter = 0;
    bool converged = false;

    std::vector<double> centroid(n), candidate(n);
    while (iter < max_iter) {
        if (converged_now()) {
            converged = true;
            break;
        }

        // Centroid of the n best vertices, in fixed order.
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += simplex[i][j];
            centroid[j] = s / static_cast<double>(n);
        }
        const std::vector<double>& worst = simplex[n];

        SimplexStep step = SimplexStep::reflect;

        for (std::size_t j = 0; j < n; ++j)
            candidate[j] = centroid[j] + config.reflection * (centroid[j] - worst[j]);
        const double f_reflect = sanitize(objective(candidate));

        if (f_reflect < values[0]) {
            std::vector<double> expanded(n);
            for (std::size_t j = 0; j < n; ++j)
                expanded[j] = centroid[j] +
                              config.reflection * config.expansion * (centroid[j] - worst[j]);
            const double f_expand = sanitize(objective(expanded));
            if (f_expand < f_reflect) {
                simplex[n] = std::move(expanded);
                values[n] = f_expand;
                step = SimplexStep::expand;
            } else {
                simplex[n] = candidate;
                values[n] = f_reflect;
                step = SimplexStep::reflect;
            }
        } else if (f_reflect < values[n - 1]) {
            simplex[n] = candidate;
            values[n] = f_reflect;
            step = SimplexStep::reflect;
        } else {
            bool do_shrink = false;
            if (f_reflect < values[n]) {
                // Outside contraction, between the reflection point and the
                // centroid.
                std::vector<double> contracted(n);
                for (std::size_t j = 0; j < n; ++j)
                    contracted[j] = centroid[j] + config.contraction * config.reflection *
                                                      (centroid[j] - worst[j]);
                const double f_contract = sanitize(objective(contracted));
                if (f_contract <= f_reflect) {
                    simplex[n] = std::move(contracted);
                    values[n] = f_contract;
                    step = SimplexStep::contract_outside;
                } else {
                    do_shrink = true;
                }
            } else {
                // Inside contraction, between the centroid and the worst
                // vertex.
                std::vector<double> contracted(n);
                for (std::size_t j = 0; j < n; ++j)
                    contracted[j] = centroid[j] - config.contraction * (centroid[j] - worst[j]);
                const double f_contract = sanitize(objective(contracted));
                if (f_contract < values[n]) {
                    simplex[n] = std::move(contracted);
                    values[n] = f_contract;
                    step = SimplexStep::contract_inside;
                } else {
                    do_shrink = true;
                }
            }
            if (do_shrink) {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + config.shrink * (simplex[i][j] - simplex[0][j]);
                    values[i] = sanitize(objective(simplex[i]));
                }
                step = SimplexStep::shrink;
            }
        }

        sort_simplex();
        ++iter;

        if (values[0] < best_f) {
            best_f = values[0];
            best_x = simplex[0];
        }

        if (observer) {
            IterationInfo info;
            info.iteration = iter;
            info.step = step;
            info.best_value = values[0];
            info.vertices = &simplex;
            info.values = &values;
            observer(info);
        }
    }

    result.x_min = std::move(best_x);
    result.f_min = best_f;
    result.iterations = iter;
    result.converged = converged;
    return result;
}

MinimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const SimplexConfig& config, const IterationObserver& observer) {
    if (x0.empty())
        raise(errc::invalid_params, "starting point must have dimension >= 1");
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(x0.begin(), x0.end()));
    for (std::size_t i = 0; i < n; ++i) {
        const double h = x0[i] != 0.0 ? 0.05 * std::abs(x0[i]) : 0.00025;
        simplex[i + 1][i] += h;
    }
    return nelder_mead_from_simplex(objective, std::move(simplex), config, observer);
}

} // namespace swd
