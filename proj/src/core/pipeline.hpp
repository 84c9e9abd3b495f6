#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/knn.hpp"
#include "core/metrics.hpp"
#include "core/recording.hpp"
#include "core/tls.hpp"
#include "core/windowing.hpp"

namespace swd {

// One successfully fitted segment: where it came from and the (mu, sigma,
// nu) estimate, plus the ground-truth label when annotations were supplied.
struct FeatureRow {
    std::string channel;
    std::size_t start_index = 0;
    TlsParams params;
    std::optional<int> label;
};

struct FeatureTable {
    std::vector<FeatureRow> rows;

    // True when every row carries a label (and the table is non-empty).
    bool labeled() const;
    std::vector<FeatureVector> feature_vectors() const;
    std::vector<int> label_values() const; // requires labeled()
};

struct ExtractOptions {
    std::size_t window_samples = 256; // 0 fits each channel whole (W = N)
    double overlap_threshold = 0.5;
    FitConfig fit;
};

// Segment counts observed during extraction. Failed fits (degenerate or
// too-short segments) are excluded from the table; fits that stop at the
// iteration cap keep their best-so-far parameters and are counted here.
struct ExtractSummary {
    std::size_t segments = 0;
    std::size_t fitted = 0;
    std::size_t failed = 0;
    std::size_t not_converged = 0;
    std::vector<std::string> failures; // one message per excluded segment
};

// Window every channel, fit each segment by maximum likelihood, and bind
// labels from the annotations when given. Row order is channel-major,
// time-ascending, independent of any execution interleaving.
FeatureTable extract_features(const Recording& recording,
                              const std::vector<Annotation>* annotations,
                              const ExtractOptions& options,
                              ExtractSummary* summary = nullptr);

// Feature-table CSV: `channel,start_index,mu,sigma,nu[,label]` data rows
// under a `#` header comment; all rows must agree on the label column.
void save_feature_table(const FeatureTable& table, const std::string& path);
FeatureTable load_feature_table(const std::string& path);

struct PredictionRow {
    std::string channel;
    std::size_t start_index = 0;
    int label = 0;
    double nearest_distance = 0.0;
};

// Predictions CSV: `channel,start_index,label,nearest_distance`.
void save_predictions(const std::vector<PredictionRow>& rows, const std::string& path);
std::vector<PredictionRow> load_predictions(const std::string& path);

// Classify every row of a feature table against a trained dataset.
std::vector<PredictionRow> classify_table(const FeatureTable& table,
                                          const LabeledDataset& dataset,
                                          const KnnConfig& config);

enum class ScatterPair { mu_sigma, mu_nu, sigma_nu };

std::optional<ScatterPair> parse_scatter_pair(const std::string& name);

// Two-column-plus-label CSV for one parameter pair of a labeled table.
void save_scatter(const FeatureTable& table, ScatterPair pair, const std::string& path);

// Segment-level scores plus signal-level scores, where a signal (channel)
// counts as positive when at least one of its segments is positive.
struct EvaluationReport {
    ConfusionMatrix per_segment;
    Rates segment_rates;
    ConfusionMatrix per_signal;
    Rates signal_rates;
    std::size_t signal_count = 0;
};

// Score predictions against a labeled truth table. Rows must align
// one-to-one on (channel, start_index).
EvaluationReport evaluate(const std::vector<PredictionRow>& predictions,
                          const FeatureTable& truth);

// Fixed-layout textual report (byte-stable for identical inputs).
std::string format_report(const EvaluationReport& report);

} // namespace swd
