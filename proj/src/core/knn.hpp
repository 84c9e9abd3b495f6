#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace swd {

using FeatureVector = std::array<double, 3>; // (mu, sigma, nu)

enum class ScalingMode { none, zscore };

// Per-dimension affine normalization, fitted on training features only.
struct ScalingSpec {
    ScalingMode mode = ScalingMode::none;
    FeatureVector mean{0.0, 0.0, 0.0};
    FeatureVector stddev{1.0, 1.0, 1.0};

    FeatureVector apply(const FeatureVector& v) const;
};

struct KnnConfig {
    std::size_t k = 1;
    ScalingSpec scaling;
};

struct LabeledDataset {
    std::vector<FeatureVector> features;
    std::vector<int> labels; // same length as features, values in {0, 1}
};

struct Prediction {
    int label = 0;
    std::vector<std::size_t> neighbor_indices;  // k distinct training indices
    std::vector<double> neighbor_distances;     // ascending, parallel to indices
};

// Fit the scaling statistics: identity for mode none, per-dimension mean and
// sample standard deviation (n-1 convention) for zscore. Throws
// zero_variance_dimension when a dimension has no spread under zscore.
ScalingSpec fit_scaling(const std::vector<FeatureVector>& features, ScalingMode mode);

// Exhaustive k-nearest-neighbors vote under the Euclidean metric with equal
// weights. Distance ties are broken by lower training index; a tied vote
// falls back to the nearest neighbor's label. Throws k_too_large or
// non_finite_query.
Prediction classify(const FeatureVector& query, const LabeledDataset& dataset,
                    const KnnConfig& config);

// Elementwise classify over the queries; errors carry the offending index.
std::vector<Prediction> classify_batch(const std::vector<FeatureVector>& queries,
                                       const LabeledDataset& dataset,
                                       const KnnConfig& config);

} // namespace swd
