#pragma once

#include <string>

#include "core/knn.hpp"

namespace swd {

// Trained classifier state: the stored vectors, their labels, the scaling
// statistics, and the kNN hyperparameters. Persisted as a versioned JSON
// document with fields {version, scaling, k, metric, vote, features, labels}.
struct Model {
    LabeledDataset dataset;
    KnnConfig config;
};

inline constexpr int kModelSchemaVersion = 1;

// Throws empty_dataset or io_failure. Serialized doubles round-trip exactly.
void save_model(const Model& model, const std::string& path);

// Throws io_failure (unreadable file), unsupported_version, or
// schema_violation (truncated/ill-typed/inconsistent document).
Model load_model(const std::string& path);

} // namespace swd
