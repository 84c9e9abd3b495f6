#include "core/knn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace swd {

FeatureVector ScalingSpec::apply(const FeatureVector& v) const {
    if (mode == ScalingMode::none) return v;
    FeatureVector out;
    for (std::size_t d = 0; d < v.size(); ++d)
        out[d] = (v[d] - mean[d]) / stddev[d];
    return out;
}

ScalingSpec fit_scaling(const std::vector<FeatureVector>& features, ScalingMode mode) {
    ScalingSpec spec;
    spec.mode = mode;
    if (mode == ScalingMode::none) return spec;

    if (features.empty())
        raise(errc::empty_dataset, "cannot fit scaling on an empty feature set");
    const double n = static_cast<double>(features.size());
    for (std::size_t d = 0; d < 3; ++d) {
        double sum = 0.0;
        for (const auto& f : features) sum += f[d];
        const double mean = sum / n;
        double ss = 0.0;
        for (const auto& f : features) {
            const double dev = f[d] - mean;
            ss += dev * dev;
        }
        const double sd = features.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        if (!(sd > 0.0))
            raise(errc::zero_variance_dimension,
                  "feature dimension " + std::to_string(d) + " has no spread");
        spec.mean[d] = mean;
        spec.stddev[d] = sd;
    }
    return spec;
}

namespace {

double euclidean(const FeatureVector& a, const FeatureVector& b) {
    double ss = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        ss += diff * diff;
    }
    return std::sqrt(ss);
}

} // namespace

Prediction classify(const FeatureVector& query, const LabeledDataset& dataset,
                    const KnnConfig& config) {
    if (dataset.features.empty())
        raise(errc::empty_dataset, "classifier has no training vectors");
    if (config.k < 1 || config.k > dataset.features.size())
        raise(errc::k_too_large,
              "k=" + std::to_string(config.k) + " with " +
                  std::to_string(dataset.features.size()) + " training vectors");
    for (double v : query)
        if (!std::isfinite(v))
            raise(errc::non_finite_query, "query has a non-finite component");

    const FeatureVector q = config.scaling.apply(query);

    // Exhaustive scan; ties on distance resolve to the lower training index
    // because the sort key is the (distance, index) pair.
    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(dataset.features.size());
    for (std::size_t i = 0; i < dataset.features.size(); ++i)
        ranked.emplace_back(euclidean(q, config.scaling.apply(dataset.features[i])), i);
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(config.k),
                      ranked.end());

    Prediction pred;
    pred.neighbor_indices.reserve(config.k);
    pred.neighbor_distances.reserve(config.k);
    std::size_t votes[2] = {0, 0};
    for (std::size_t i = 0; i < config.k; ++i) {
        pred.neighbor_indices.push_back(ranked[i].second);
        pred.neighbor_distances.push_back(ranked[i].first);
        ++votes[dataset.labels[ranked[i].second]];
    }
    if (votes[0] == votes[1])
        pred.label = dataset.labels[ranked[0].second]; // tie: nearest neighbor decides
    else
        pred.label = votes[1] > votes[0] ? 1 : 0;
    return pred;
}

std::vector<Prediction> classify_batch(const std::vector<FeatureVector>& queries,
                                       const LabeledDataset& dataset,
                                       const KnnConfig& config) {
    std::vector<Prediction> out;
    out.reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        try {
            out.push_back(classify(queries[i], dataset, config));
        } catch (const error& e) {
            raise(e.code(), "query " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

} // namespace swd
