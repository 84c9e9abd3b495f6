// C boundary of the toolkit: thin adapters from the opaque-handle interface
// in swd/swd.h onto the C++ core. Every entry point catches, records the
// message in thread-local storage, and returns a status code — exceptions
// never cross the ABI.

#include "swd/swd.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/knn.hpp"
#include "core/metrics.hpp"
#include "core/model_io.hpp"
#include "core/nelder_mead.hpp"
#include "core/pipeline.hpp"
#include "core/recording.hpp"
#include "core/synth.hpp"
#include "core/text.hpp"
#include "core/tls.hpp"
#include "core/windowing.hpp"

struct swd_recording {
    swd::Recording value;
};

struct swd_annotations {
    std::vector<swd::Annotation> value;
};

struct swd_feature_table {
    swd::FeatureTable value;
};

struct swd_model {
    swd::Model value;
};

struct swd_predictions {
    std::vector<swd::PredictionRow> value;
};

namespace {

thread_local std::string g_last_error;

swd_status to_status(swd::errc code) {
    switch (code) {
    case swd::errc::ok: return SWD_OK;
    case swd::errc::missing_file: return SWD_E_MISSING_FILE;
    case swd::errc::malformed_header: return SWD_E_MALFORMED_HEADER;
    case swd::errc::non_numeric_sample: return SWD_E_NON_NUMERIC_SAMPLE;
    case swd::errc::inconsistent_row_width: return SWD_E_INCONSISTENT_ROW_WIDTH;
    case swd::errc::non_positive_sample_rate: return SWD_E_NON_POSITIVE_SAMPLE_RATE;
    case swd::errc::malformed_line: return SWD_E_MALFORMED_LINE;
    case swd::errc::unknown_label: return SWD_E_UNKNOWN_LABEL;
    case swd::errc::negative_onset: return SWD_E_NEGATIVE_ONSET;
    case swd::errc::io_failure: return SWD_E_IO_FAILURE;
    case swd::errc::empty_dataset: return SWD_E_EMPTY_DATASET;
    case swd::errc::unsupported_version: return SWD_E_UNSUPPORTED_VERSION;
    case swd::errc::schema_violation: return SWD_E_SCHEMA_VIOLATION;
    case swd::errc::unknown_channel: return SWD_E_UNKNOWN_CHANNEL;
    case swd::errc::window_larger_than_signal: return SWD_E_WINDOW_LARGER_THAN_SIGNAL;
    case swd::errc::window_too_small: return SWD_E_WINDOW_TOO_SMALL;
    case swd::errc::invalid_params: return SWD_E_INVALID_PARAMS;
    case swd::errc::empty_sample: return SWD_E_EMPTY_SAMPLE;
    case swd::errc::too_few_samples: return SWD_E_TOO_FEW_SAMPLES;
    case swd::errc::degenerate_sample: return SWD_E_DEGENERATE_SAMPLE;
    case swd::errc::non_finite_objective: return SWD_E_NON_FINITE_OBJECTIVE;
    case swd::errc::zero_variance_dimension: return SWD_E_ZERO_VARIANCE_DIMENSION;
    case swd::errc::k_too_large: return SWD_E_K_TOO_LARGE;
    case swd::errc::non_finite_query: return SWD_E_NON_FINITE_QUERY;
    case swd::errc::length_mismatch: return SWD_E_LENGTH_MISMATCH;
    case swd::errc::empty_input: return SWD_E_EMPTY_INPUT;
    case swd::errc::overlapping_events: return SWD_E_OVERLAPPING_EVENTS;
    case swd::errc::event_out_of_range: return SWD_E_EVENT_OUT_OF_RANGE;
    }
    return SWD_E_INTERNAL;
}

// Run the body, translating exceptions into status codes.
template <typename Fn>
swd_status guarded(Fn&& body) {
    try {
        body();
        return SWD_OK;
    } catch (const swd::error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SWD_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SWD_E_INTERNAL;
    }
}

swd_status invalid_argument(const char* what) {
    g_last_error = std::string("invalid argument: ") + what;
    return SWD_E_INVALID_ARGUMENT;
}

swd::FitConfig to_fit_config(const swd_fit_options* options) {
    swd::FitConfig config;
    if (options) {
        config.tol_x = options->tol_x;
        config.tol_f = options->tol_f;
        config.max_iter = options->max_iter;
    }
    return config;
}

swd::ScalingMode to_scaling_mode(int mode) {
    if (mode == SWD_SCALING_ZSCORE) return swd::ScalingMode::zscore;
    if (mode == SWD_SCALING_NONE) return swd::ScalingMode::none;
    swd::raise(swd::errc::invalid_params,
               "scaling mode must be SWD_SCALING_NONE or SWD_SCALING_ZSCORE");
}

void fill_rate(double* value, int* defined, const std::optional<double>& rate) {
    if (defined) *defined = rate.has_value() ? 1 : 0;
    if (value && rate) *value = *rate;
}

void fill_confusion(swd_confusion& out, const swd::ConfusionMatrix& cm) {
    out.tp = cm.tp;
    out.tn = cm.tn;
    out.fp = cm.fp;
    out.fn = cm.fn;
}

swd::Model train_model(const swd::FeatureTable& table, size_t k, int scaling_mode) {
    if (!table.labeled())
        swd::raise(swd::errc::unknown_label,
                   "training needs a labeled feature table");
    swd::Model model;
    model.dataset.features = table.feature_vectors();
    model.dataset.labels = table.label_values();

    bool seen[2] = {false, false};
    for (int label : model.dataset.labels) seen[label] = true;
    if (!seen[0] || !seen[1])
        swd::raise(swd::errc::empty_dataset,
                   "training data contains a single class; classifier would be constant");
    if (k < 1 || k > model.dataset.features.size())
        swd::raise(swd::errc::k_too_large,
                   "k=" + std::to_string(k) + " with " +
                       std::to_string(model.dataset.features.size()) + " training rows");

    model.config.k = k;
    model.config.scaling =
        swd::fit_scaling(model.dataset.features, to_scaling_mode(scaling_mode));
    return model;
}

} // namespace

extern "C" {

const char* swd_version(void) { return "1.0.0"; }

const char* swd_status_name(swd_status status) {
    switch (status) {
    case SWD_OK: return "ok";
    case SWD_E_MISSING_FILE: return "missing_file";
    case SWD_E_MALFORMED_HEADER: return "malformed_header";
    case SWD_E_NON_NUMERIC_SAMPLE: return "non_numeric_sample";
    case SWD_E_INCONSISTENT_ROW_WIDTH: return "inconsistent_row_width";
    case SWD_E_NON_POSITIVE_SAMPLE_RATE: return "non_positive_sample_rate";
    case SWD_E_MALFORMED_LINE: return "malformed_line";
    case SWD_E_UNKNOWN_LABEL: return "unknown_label";
    case SWD_E_NEGATIVE_ONSET: return "negative_onset";
    case SWD_E_IO_FAILURE: return "io_failure";
    case SWD_E_EMPTY_DATASET: return "empty_dataset";
    case SWD_E_UNSUPPORTED_VERSION: return "unsupported_version";
    case SWD_E_SCHEMA_VIOLATION: return "schema_violation";
    case SWD_E_UNKNOWN_CHANNEL: return "unknown_channel";
    case SWD_E_WINDOW_LARGER_THAN_SIGNAL: return "window_larger_than_signal";
    case SWD_E_WINDOW_TOO_SMALL: return "window_too_small";
    case SWD_E_INVALID_PARAMS: return "invalid_params";
    case SWD_E_EMPTY_SAMPLE: return "empty_sample";
    case SWD_E_TOO_FEW_SAMPLES: return "too_few_samples";
    case SWD_E_DEGENERATE_SAMPLE: return "degenerate_sample";
    case SWD_E_NON_FINITE_OBJECTIVE: return "non_finite_objective";
    case SWD_E_ZERO_VARIANCE_DIMENSION: return "zero_variance_dimension";
    case SWD_E_K_TOO_LARGE: return "k_too_large";
    case SWD_E_NON_FINITE_QUERY: return "non_finite_query";
    case SWD_E_LENGTH_MISMATCH: return "length_mismatch";
    case SWD_E_EMPTY_INPUT: return "empty_input";
    case SWD_E_OVERLAPPING_EVENTS: return "overlapping_events";
    case SWD_E_EVENT_OUT_OF_RANGE: return "event_out_of_range";
    case SWD_E_INVALID_ARGUMENT: return "invalid_argument";
    case SWD_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* swd_last_error(void) { return g_last_error.c_str(); }

/* ------------------------- density / fit ------------------------- */

swd_status swd_tls_pdf(double x, double mu, double sigma, double nu, double* out) {
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] { *out = swd::tls_pdf(x, {mu, sigma, nu}); });
}

swd_status swd_tls_log_pdf(double x, double mu, double sigma, double nu, double* out) {
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] { *out = swd::tls_log_pdf(x, {mu, sigma, nu}); });
}

swd_status swd_neg_log_likelihood(const double* samples, size_t count, double mu,
                                  double sigma, double nu, double* out) {
    if (!out) return invalid_argument("out is NULL");
    if (!samples && count > 0) return invalid_argument("samples is NULL");
    return guarded([&] {
        *out = swd::neg_log_likelihood({samples, count}, {mu, sigma, nu});
    });
}

swd_status swd_fit_mle(const double* samples, size_t count,
                       const swd_fit_options* options, swd_fit_report* report) {
    if (!report) return invalid_argument("report is NULL");
    if (!samples && count > 0) return invalid_argument("samples is NULL");
    return guarded([&] {
        const swd::FitReport fit = swd::fit_mle({samples, count}, to_fit_config(options));
        report->mu = fit.params.mu;
        report->sigma = fit.params.sigma;
        report->nu = fit.params.nu;
        report->neg_log_likelihood = fit.neg_log_likelihood;
        report->iterations = fit.iterations;
        report->converged = fit.converged ? 1 : 0;
    });
}

swd_status swd_tls_sample(double mu, double sigma, double nu, size_t count,
                          uint64_t seed, double* out) {
    if (!out) return invalid_argument("out is NULL");
    if (count == 0) return invalid_argument("count is zero");
    return guarded([&] {
        const auto values = swd::tls_sample({mu, sigma, nu}, count, seed);
        std::memcpy(out, values.data(), count * sizeof(double));
    });
}

/* --------------------------- optimizer --------------------------- */

swd_status swd_nelder_mead(swd_objective_fn objective, void* context,
                           const double* x0, size_t n,
                           const swd_simplex_options* options, double* x_min,
                           swd_minimize_result* result) {
    if (!objective) return invalid_argument("objective is NULL");
    if (!x0 || n == 0) return invalid_argument("x0 is NULL or empty");
    if (!x_min || !result) return invalid_argument("x_min or result is NULL");
    return guarded([&] {
        swd::SimplexConfig config;
        if (options) {
            config.tol_x = options->tol_x;
            config.tol_f = options->tol_f;
            config.max_iter = options->max_iter;
            config.reflection = options->reflection;
            config.expansion = options->expansion;
            config.contraction = options->contraction;
            config.shrink = options->shrink;
        }
        const auto wrapped = [&](std::span<const double> x) {
            return objective(x.data(), x.size(), context);
        };
        const swd::MinimizeResult r = swd::nelder_mead(wrapped, {x0, n}, config);
        std::memcpy(x_min, r.x_min.data(), n * sizeof(double));
        result->f_min = r.f_min;
        result->iterations = r.iterations;
        result->converged = r.converged ? 1 : 0;
    });
}

/* ------------------------ recordings, I/O ------------------------ */

swd_status swd_recording_create(double sample_rate_hz, const char* const* channels,
                                size_t channel_count, const double* data_row_major,
                                size_t sample_count, swd_recording** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!channels || channel_count == 0) return invalid_argument("channels is NULL or empty");
    if (!data_row_major) return invalid_argument("data is NULL");
    return guarded([&] {
        std::vector<std::string> names;
        names.reserve(channel_count);
        for (size_t i = 0; i < channel_count; ++i) {
            if (!channels[i])
                swd::raise(swd::errc::malformed_header, "channel name is NULL");
            names.emplace_back(channels[i]);
        }
        std::vector<double> data(data_row_major,
                                 data_row_major + sample_count * channel_count);
        *out = new swd_recording{swd::make_recording(sample_rate_hz, std::move(names),
                                                     std::move(data), sample_count)};
    });
}

swd_status swd_recording_load(const char* path, swd_recording** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { *out = new swd_recording{swd::load_recording(path)}; });
}

swd_status swd_recording_save(const swd_recording* recording, const char* path) {
    if (!recording) return invalid_argument("recording is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { swd::save_recording(recording->value, path); });
}

double swd_recording_sample_rate(const swd_recording* recording) {
    return recording ? recording->value.sample_rate_hz : 0.0;
}

size_t swd_recording_channel_count(const swd_recording* recording) {
    return recording ? recording->value.channel_count() : 0;
}

size_t swd_recording_sample_count(const swd_recording* recording) {
    return recording ? recording->value.sample_count : 0;
}

const char* swd_recording_channel_name(const swd_recording* recording, size_t index) {
    if (!recording || index >= recording->value.channels.size()) return nullptr;
    return recording->value.channels[index].c_str();
}

swd_status swd_recording_channel_data(const swd_recording* recording,
                                      const char* channel, double* out) {
    if (!recording) return invalid_argument("recording is NULL");
    if (!channel || !out) return invalid_argument("channel or out is NULL");
    return guarded([&] {
        const auto index = recording->value.channel_index(channel);
        if (!index)
            swd::raise(swd::errc::unknown_channel,
                       std::string("no channel named '") + channel + "'");
        const auto data = recording->value.channel_data(*index);
        std::memcpy(out, data.data(), data.size() * sizeof(double));
    });
}

void swd_recording_free(swd_recording* recording) { delete recording; }

/* -------------------------- annotations -------------------------- */

swd_status swd_annotations_create(swd_annotations** out) {
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] { *out = new swd_annotations{}; });
}

swd_status swd_annotations_add(swd_annotations* annotations, const char* channel,
                               double onset_s, double duration_s, int label) {
    if (!annotations) return invalid_argument("annotations is NULL");
    if (!channel) return invalid_argument("channel is NULL");
    return guarded([&] {
        if (!swd::valid_channel_name(channel))
            swd::raise(swd::errc::malformed_line,
                       std::string("invalid channel name '") + channel + "'");
        if (!(onset_s >= 0.0) || !std::isfinite(onset_s))
            swd::raise(swd::errc::negative_onset, "onset must be non-negative");
        if (!(duration_s > 0.0) || !std::isfinite(duration_s))
            swd::raise(swd::errc::malformed_line, "duration must be positive");
        if (label != 0 && label != 1)
            swd::raise(swd::errc::unknown_label, "label must be 0 or 1");
        annotations->value.push_back({channel, onset_s, duration_s, label});
    });
}

swd_status swd_annotations_load(const char* path, swd_annotations** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { *out = new swd_annotations{swd::load_annotations(path)}; });
}

swd_status swd_annotations_save(const swd_annotations* annotations, const char* path) {
    if (!annotations) return invalid_argument("annotations is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { swd::save_annotations(annotations->value, path); });
}

size_t swd_annotations_count(const swd_annotations* annotations) {
    return annotations ? annotations->value.size() : 0;
}

swd_status swd_annotations_get(const swd_annotations* annotations, size_t index,
                               const char** channel, double* onset_s,
                               double* duration_s, int* label) {
    if (!annotations) return invalid_argument("annotations is NULL");
    if (index >= annotations->value.size()) return invalid_argument("index out of range");
    const auto& ann = annotations->value[index];
    if (channel) *channel = ann.channel.c_str();
    if (onset_s) *onset_s = ann.onset_s;
    if (duration_s) *duration_s = ann.duration_s;
    if (label) *label = ann.label;
    return SWD_OK;
}

swd_status swd_annotations_validate(const swd_annotations* annotations,
                                    const swd_recording* recording) {
    if (!annotations || !recording)
        return invalid_argument("annotations or recording is NULL");
    return guarded(
        [&] { swd::validate_annotations(annotations->value, recording->value); });
}

void swd_annotations_free(swd_annotations* annotations) { delete annotations; }

/* ---------------------------- synthesis -------------------------- */

swd_status swd_synth_generate(double sample_rate_hz, double duration_s,
                              const char* channel, const swd_synth_event* events,
                              size_t event_count, double background_mu,
                              double background_sigma, double background_nu,
                              uint64_t seed, swd_recording** recording_out,
                              swd_annotations** annotations_out) {
    if (!channel) return invalid_argument("channel is NULL");
    if (!events && event_count > 0) return invalid_argument("events is NULL");
    if (!recording_out && !annotations_out)
        return invalid_argument("no out-parameter given");
    return guarded([&] {
        swd::SynthSpec spec;
        spec.sample_rate_hz = sample_rate_hz;
        spec.duration_s = duration_s;
        spec.channel = channel;
        spec.background = {background_mu, background_sigma, background_nu};
        spec.seed = seed;
        spec.events.reserve(event_count);
        for (size_t i = 0; i < event_count; ++i)
            spec.events.push_back({events[i].onset_s, events[i].duration_s,
                                   events[i].cycle_hz, events[i].amplitude_mv});
        auto [recording, annotations] = swd::generate(spec);
        if (recording_out)
            *recording_out = new swd_recording{std::move(recording)};
        if (annotations_out)
            *annotations_out = new swd_annotations{std::move(annotations)};
    });
}

/* ------------------------ feature extraction --------------------- */

swd_status swd_extract(const swd_recording* recording,
                       const swd_annotations* annotations,
                       const swd_extract_options* options, swd_feature_table** out,
                       swd_extract_summary* summary) {
    if (!recording) return invalid_argument("recording is NULL");
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] {
        swd::ExtractOptions opts;
        if (options) {
            opts.window_samples = options->window_samples;
            opts.overlap_threshold = options->overlap_threshold;
            opts.fit = to_fit_config(&options->fit);
        }
        swd::ExtractSummary s;
        auto table = swd::extract_features(
            recording->value, annotations ? &annotations->value : nullptr, opts, &s);
        if (summary) {
            summary->segments = s.segments;
            summary->fitted = s.fitted;
            summary->failed = s.failed;
            summary->not_converged = s.not_converged;
        }
        *out = new swd_feature_table{std::move(table)};
    });
}

swd_status swd_feature_table_load(const char* path, swd_feature_table** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { *out = new swd_feature_table{swd::load_feature_table(path)}; });
}

swd_status swd_feature_table_save(const swd_feature_table* table, const char* path) {
    if (!table) return invalid_argument("table is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { swd::save_feature_table(table->value, path); });
}

size_t swd_feature_table_size(const swd_feature_table* table) {
    return table ? table->value.rows.size() : 0;
}

int swd_feature_table_labeled(const swd_feature_table* table) {
    return table && table->value.labeled() ? 1 : 0;
}

swd_status swd_feature_table_row(const swd_feature_table* table, size_t index,
                                 const char** channel, size_t* start_index,
                                 double* mu, double* sigma, double* nu, int* label) {
    if (!table) return invalid_argument("table is NULL");
    if (index >= table->value.rows.size()) return invalid_argument("index out of range");
    const auto& row = table->value.rows[index];
    if (channel) *channel = row.channel.c_str();
    if (start_index) *start_index = row.start_index;
    if (mu) *mu = row.params.mu;
    if (sigma) *sigma = row.params.sigma;
    if (nu) *nu = row.params.nu;
    if (label) *label = row.label.value_or(-1);
    return SWD_OK;
}

void swd_feature_table_free(swd_feature_table* table) { delete table; }

swd_status swd_scatter_save(const swd_feature_table* table, const char* pair,
                            const char* path) {
    if (!table) return invalid_argument("table is NULL");
    if (!pair || !path) return invalid_argument("pair or path is NULL");
    return guarded([&] {
        const auto parsed = swd::parse_scatter_pair(pair);
        if (!parsed)
            swd::raise(swd::errc::invalid_params,
                       std::string("unknown pair '") + pair +
                           "' (expected mu-sigma, mu-nu, or sigma-nu)");
        swd::save_scatter(table->value, *parsed, path);
    });
}

/* --------------------------- classifier -------------------------- */

swd_status swd_train(const swd_feature_table* table, size_t k, int scaling_mode,
                     swd_model** out) {
    if (!table) return invalid_argument("table is NULL");
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] {
        *out = new swd_model{train_model(table->value, k, scaling_mode)};
    });
}

swd_status swd_model_create(const double* features, const int* labels, size_t count,
                            size_t k, int scaling_mode, swd_model** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!features || !labels || count == 0)
        return invalid_argument("features or labels is NULL or empty");
    return guarded([&] {
        swd::FeatureTable table;
        table.rows.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            swd::FeatureRow row;
            row.channel = "train";
            row.start_index = i;
            row.params = {features[3 * i], features[3 * i + 1], features[3 * i + 2]};
            if (labels[i] != 0 && labels[i] != 1)
                swd::raise(swd::errc::unknown_label,
                           "label at index " + std::to_string(i) + " is not 0/1");
            row.label = labels[i];
            table.rows.push_back(std::move(row));
        }
        *out = new swd_model{train_model(table, k, scaling_mode)};
    });
}

swd_status swd_model_save(const swd_model* model, const char* path) {
    if (!model) return invalid_argument("model is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { swd::save_model(model->value, path); });
}

swd_status swd_model_load(const char* path, swd_model** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { *out = new swd_model{swd::load_model(path)}; });
}

size_t swd_model_size(const swd_model* model) {
    return model ? model->value.dataset.features.size() : 0;
}

size_t swd_model_k(const swd_model* model) {
    return model ? model->value.config.k : 0;
}

swd_status swd_classify(const swd_model* model, const double query[3], int* label,
                        size_t* neighbor_indices, double* neighbor_distances) {
    if (!model) return invalid_argument("model is NULL");
    if (!query || !label) return invalid_argument("query or label is NULL");
    return guarded([&] {
        const swd::Prediction pred =
            swd::classify({query[0], query[1], query[2]}, model->value.dataset,
                          model->value.config);
        *label = pred.label;
        if (neighbor_indices)
            std::memcpy(neighbor_indices, pred.neighbor_indices.data(),
                        pred.neighbor_indices.size() * sizeof(size_t));
        if (neighbor_distances)
            std::memcpy(neighbor_distances, pred.neighbor_distances.data(),
                        pred.neighbor_distances.size() * sizeof(double));
    });
}

swd_status swd_classify_table(const swd_model* model, const swd_feature_table* table,
                              swd_predictions** out) {
    if (!model || !table) return invalid_argument("model or table is NULL");
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] {
        *out = new swd_predictions{swd::classify_table(
            table->value, model->value.dataset, model->value.config)};
    });
}

void swd_model_free(swd_model* model) { delete model; }

swd_status swd_predictions_save(const swd_predictions* predictions, const char* path) {
    if (!predictions) return invalid_argument("predictions is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { swd::save_predictions(predictions->value, path); });
}

swd_status swd_predictions_load(const char* path, swd_predictions** out) {
    if (!out) return invalid_argument("out is NULL");
    if (!path) return invalid_argument("path is NULL");
    return guarded([&] { *out = new swd_predictions{swd::load_predictions(path)}; });
}

size_t swd_predictions_size(const swd_predictions* predictions) {
    return predictions ? predictions->value.size() : 0;
}

swd_status swd_predictions_row(const swd_predictions* predictions, size_t index,
                               const char** channel, size_t* start_index, int* label,
                               double* nearest_distance) {
    if (!predictions) return invalid_argument("predictions is NULL");
    if (index >= predictions->value.size()) return invalid_argument("index out of range");
    const auto& row = predictions->value[index];
    if (channel) *channel = row.channel.c_str();
    if (start_index) *start_index = row.start_index;
    if (label) *label = row.label;
    if (nearest_distance) *nearest_distance = row.nearest_distance;
    return SWD_OK;
}

void swd_predictions_free(swd_predictions* predictions) { delete predictions; }

/* --------------------------- evaluation -------------------------- */

swd_status swd_confusion_counts(const int* predicted, const int* actual, size_t count,
                                swd_confusion* out) {
    if (!out) return invalid_argument("out is NULL");
    if ((!predicted || !actual) && count > 0)
        return invalid_argument("predicted or actual is NULL");
    return guarded([&] {
        const swd::ConfusionMatrix cm = swd::confusion(
            std::vector<int>(predicted, predicted + count),
            std::vector<int>(actual, actual + count));
        out->tp = cm.tp;
        out->tn = cm.tn;
        out->fp = cm.fp;
        out->fn = cm.fn;
    });
}

swd_status swd_rates(const swd_confusion* confusion, double* accuracy,
                     double* sensitivity, int* sensitivity_defined,
                     double* specificity, int* specificity_defined) {
    if (!confusion) return invalid_argument("confusion is NULL");
    return guarded([&] {
        const swd::Rates r = swd::rates(
            {confusion->tp, confusion->tn, confusion->fp, confusion->fn});
        if (accuracy) *accuracy = r.accuracy;
        fill_rate(sensitivity, sensitivity_defined, r.sensitivity);
        fill_rate(specificity, specificity_defined, r.specificity);
    });
}

swd_status swd_evaluate(const swd_predictions* predictions,
                        const swd_feature_table* truth, swd_evaluation* out) {
    if (!predictions || !truth) return invalid_argument("predictions or truth is NULL");
    if (!out) return invalid_argument("out is NULL");
    return guarded([&] {
        const swd::EvaluationReport report =
            swd::evaluate(predictions->value, truth->value);
        *out = swd_evaluation{};
        fill_confusion(out->per_segment, report.per_segment);
        out->segment_accuracy = report.segment_rates.accuracy;
        fill_rate(&out->segment_sensitivity, &out->segment_sensitivity_defined,
                  report.segment_rates.sensitivity);
        fill_rate(&out->segment_specificity, &out->segment_specificity_defined,
                  report.segment_rates.specificity);
        out->signal_count = report.signal_count;
        fill_confusion(out->per_signal, report.per_signal);
        out->signal_accuracy = report.signal_rates.accuracy;
        fill_rate(&out->signal_sensitivity, &out->signal_sensitivity_defined,
                  report.signal_rates.sensitivity);
        fill_rate(&out->signal_specificity, &out->signal_specificity_defined,
                  report.signal_rates.specificity);
    });
}

swd_status swd_evaluation_format(const swd_evaluation* evaluation, char** out) {
    if (!evaluation || !out) return invalid_argument("evaluation or out is NULL");
    return guarded([&] {
        swd::EvaluationReport report;
        report.per_segment = {evaluation->per_segment.tp, evaluation->per_segment.tn,
                              evaluation->per_segment.fp, evaluation->per_segment.fn};
        report.segment_rates.accuracy = evaluation->segment_accuracy;
        if (evaluation->segment_sensitivity_defined)
            report.segment_rates.sensitivity = evaluation->segment_sensitivity;
        if (evaluation->segment_specificity_defined)
            report.segment_rates.specificity = evaluation->segment_specificity;
        report.signal_count = evaluation->signal_count;
        report.per_signal = {evaluation->per_signal.tp, evaluation->per_signal.tn,
                             evaluation->per_signal.fp, evaluation->per_signal.fn};
        report.signal_rates.accuracy = evaluation->signal_accuracy;
        if (evaluation->signal_sensitivity_defined)
            report.signal_rates.sensitivity = evaluation->signal_sensitivity;
        if (evaluation->signal_specificity_defined)
            report.signal_rates.specificity = evaluation->signal_specificity;

        const std::string text = swd::format_report(report);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

void swd_string_free(char* text) { delete[] text; }

} // extern "C"
