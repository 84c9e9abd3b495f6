#pragma once

#include <functional>
#include <span>
#include <vector>

namespace swd {

// Derivative-free simplex minimization in the Lagarias et al. formulation
// (the fminsearch variant): ordered reflect / expand / contract / shrink
// steps with the standard coefficients.

struct SimplexConfig {
    double tol_x = 1e-8;     // max vertex-to-best distance (inf norm)
    double tol_f = 1e-8;     // function spread across vertices
    int max_iter = 0;        // 0 selects the default 200 * n
    double reflection = 1.0; // rho  > 0
    double expansion = 2.0;  // chi  > 1
    double contraction = 0.5; // gamma in (0, 1)
    double shrink = 0.5;     // sigma in (0, 1)
};

struct MinimizeResult {
    std::vector<double> x_min;
    double f_min = 0.0;
    int iterations = 0;
    bool converged = false;
};

enum class SimplexStep { reflect, expand, contract_outside, contract_inside, shrink };

// Snapshot handed to the observer after every completed iteration. Vertices
// are sorted best first; pointers are valid only during the call.
struct IterationInfo {
    int iteration = 0;
    SimplexStep step = SimplexStep::reflect;
    double best_value = 0.0;
    const std::vector<std::vector<double>>* vertices = nullptr;
    const std::vector<double>* values = nullptr;
};

using Objective = std::function<double(std::span<const double>)>;
using IterationObserver = std::function<void(const IterationInfo&)>;

// Minimize from a point; the initial simplex is x0 plus n vertices offset by
// 0.05 * |x0_i| along each axis (0.00025 where x0_i is zero).
MinimizeResult nelder_mead(const Objective& objective, std::span<const double> x0,
                           const SimplexConfig& config = {},
                           const IterationObserver& observer = {});

// Minimize from an explicit initial simplex of n + 1 vertices in R^n.
MinimizeResult nelder_mead_from_simplex(const Objective& objective,
                                        std::vector<std::vector<double>> simplex,
                                        const SimplexConfig& config = {},
                                        const IterationObserver& observer = {});

} // namespace swd
