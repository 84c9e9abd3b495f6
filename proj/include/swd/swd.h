/* Public C interface of the spike-and-wave detection toolkit.
 *
 * The library fits a t-location-scale distribution to fixed-length EEG
 * segments by maximum likelihood (Nelder-Mead simplex) and classifies the
 * resulting (mu, sigma, nu) feature vectors with a k-nearest-neighbors
 * vote. All state lives behind opaque handles; every fallible call returns
 * an swd_status and leaves a human-readable message in swd_last_error().
 *
 * Handles returned through an out-parameter are owned by the caller and
 * must be released with the matching *_free function. Out-parameters are
 * written only on SWD_OK. All functions are thread-safe on distinct
 * handles; a handle may be shared across threads for read-only use.
 */
#ifndef SWD_H
#define SWD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SWD_BUILD)
#define SWD_API __declspec(dllexport)
#else
#define SWD_API __declspec(dllimport)
#endif
#else
#if defined(SWD_BUILD)
#define SWD_API __attribute__((visibility("default")))
#else
#define SWD_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swd_status {
    SWD_OK = 0,
    /* recording / annotation / model files */
    SWD_E_MISSING_FILE,
    SWD_E_MALFORMED_HEADER,
    SWD_E_NON_NUMERIC_SAMPLE,
    SWD_E_INCONSISTENT_ROW_WIDTH,
    SWD_E_NON_POSITIVE_SAMPLE_RATE,
    SWD_E_MALFORMED_LINE,
    SWD_E_UNKNOWN_LABEL,
    SWD_E_NEGATIVE_ONSET,
    SWD_E_IO_FAILURE,
    SWD_E_EMPTY_DATASET,
    SWD_E_UNSUPPORTED_VERSION,
    SWD_E_SCHEMA_VIOLATION,
    /* windowing */
    SWD_E_UNKNOWN_CHANNEL,
    SWD_E_WINDOW_LARGER_THAN_SIGNAL,
    SWD_E_WINDOW_TOO_SMALL,
    /* density / fitting */
    SWD_E_INVALID_PARAMS,
    SWD_E_EMPTY_SAMPLE,
    SWD_E_TOO_FEW_SAMPLES,
    SWD_E_DEGENERATE_SAMPLE,
    /* optimizer */
    SWD_E_NON_FINITE_OBJECTIVE,
    /* classifier */
    SWD_E_ZERO_VARIANCE_DIMENSION,
    SWD_E_K_TOO_LARGE,
    SWD_E_NON_FINITE_QUERY,
    /* metrics */
    SWD_E_LENGTH_MISMATCH,
    SWD_E_EMPTY_INPUT,
    /* synthesis */
    SWD_E_OVERLAPPING_EVENTS,
    SWD_E_EVENT_OUT_OF_RANGE,
    /* C boundary */
    SWD_E_INVALID_ARGUMENT, /* NULL handle or out-parameter */
    SWD_E_INTERNAL          /* unexpected failure; see swd_last_error() */
} swd_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
SWD_API const char* swd_version(void);

/* Stable identifier of a status code, e.g. "missing_file". */
SWD_API const char* swd_status_name(swd_status status);

/* Message from the most recent failing call on this thread. Static
 * thread-local storage; valid until the next failing call. Never NULL. */
SWD_API const char* swd_last_error(void);

/* ---------------------------------------------------------------- *
 * t-location-scale density, fitting, sampling                      *
 * ---------------------------------------------------------------- */

typedef struct swd_fit_options {
    double tol_x;   /* simplex diameter threshold, default 1e-8 */
    double tol_f;   /* function spread threshold, default 1e-8 */
    int max_iter;   /* 0 selects the default of 200 * dimension */
} swd_fit_options;

typedef struct swd_fit_report {
    double mu;
    double sigma;
    double nu;
    double neg_log_likelihood;
    int iterations;
    int converged; /* 0 = stopped at the iteration cap */
} swd_fit_report;

/* Density f(x | mu, sigma, nu), evaluated in log space internally. */
SWD_API swd_status swd_tls_pdf(double x, double mu, double sigma, double nu,
                               double* out);

/* Natural log of the density; finite for |x - mu|/sigma up to 1e150. */
SWD_API swd_status swd_tls_log_pdf(double x, double mu, double sigma, double nu,
                                   double* out);

/* Negative log-likelihood of a sample under fixed parameters. */
SWD_API swd_status swd_neg_log_likelihood(const double* samples, size_t count,
                                          double mu, double sigma, double nu,
                                          double* out);

/* Maximum-likelihood fit over (mu, ln sigma, ln nu). `options` may be NULL
 * for defaults. A fit that stops at the iteration cap still fills `report`
 * (best point seen, converged = 0) and returns SWD_OK. */
SWD_API swd_status swd_fit_mle(const double* samples, size_t count,
                               const swd_fit_options* options,
                               swd_fit_report* report);

/* `count` deterministic draws keyed by `seed` (Philox4x32-10 underneath):
 * mu + sigma * Z / sqrt(V / nu) with Z standard normal, V chi-square(nu). */
SWD_API swd_status swd_tls_sample(double mu, double sigma, double nu,
                                  size_t count, uint64_t seed, double* out);

/* ---------------------------------------------------------------- *
 * Nelder-Mead simplex minimization                                 *
 * ---------------------------------------------------------------- */

/* Objective callback: return the function value at x (dimension n).
 * Return NaN to mark a point as infeasible mid-search. */
typedef double (*swd_objective_fn)(const double* x, size_t n, void* context);

typedef struct swd_simplex_options {
    double tol_x;       /* default 1e-8 */
    double tol_f;       /* default 1e-8 */
    int max_iter;       /* 0 selects 200 * n */
    double reflection;  /* rho,   default 1.0 */
    double expansion;   /* chi,   default 2.0 */
    double contraction; /* gamma, default 0.5 */
    double shrink;      /* sigma, default 0.5 */
} swd_simplex_options;

typedef struct swd_minimize_result {
    double f_min;
    int iterations;
    int converged;
} swd_minimize_result;

/* Minimize an n-dimensional objective from x0. `x_min` must hold n
 * doubles; `options` may be NULL for defaults. */
SWD_API swd_status swd_nelder_mead(swd_objective_fn objective, void* context,
                                   const double* x0, size_t n,
                                   const swd_simplex_options* options,
                                   double* x_min, swd_minimize_result* result);

/* ---------------------------------------------------------------- *
 * Recordings and annotations                                       *
 * ---------------------------------------------------------------- */

typedef struct swd_recording swd_recording;
typedef struct swd_annotations swd_annotations;

/* Build a recording from row-major samples (sample_count rows, one column
 * per channel name). The data is copied. */
SWD_API swd_status swd_recording_create(double sample_rate_hz,
                                        const char* const* channels,
                                        size_t channel_count,
                                        const double* data_row_major,
                                        size_t sample_count,
                                        swd_recording** out);
SWD_API swd_status swd_recording_load(const char* path, swd_recording** out);
SWD_API swd_status swd_recording_save(const swd_recording* recording,
                                      const char* path);
SWD_API double swd_recording_sample_rate(const swd_recording* recording);
SWD_API size_t swd_recording_channel_count(const swd_recording* recording);
SWD_API size_t swd_recording_sample_count(const swd_recording* recording);
/* Name of channel `index`; NULL when out of range. Owned by the handle. */
SWD_API const char* swd_recording_channel_name(const swd_recording* recording,
                                               size_t index);
/* Copy one channel into `out` (sample_count doubles). */
SWD_API swd_status swd_recording_channel_data(const swd_recording* recording,
                                              const char* channel, double* out);
SWD_API void swd_recording_free(swd_recording* recording);

SWD_API swd_status swd_annotations_create(swd_annotations** out);
SWD_API swd_status swd_annotations_add(swd_annotations* annotations,
                                       const char* channel, double onset_s,
                                       double duration_s, int label);
SWD_API swd_status swd_annotations_load(const char* path, swd_annotations** out);
SWD_API swd_status swd_annotations_save(const swd_annotations* annotations,
                                        const char* path);
SWD_API size_t swd_annotations_count(const swd_annotations* annotations);
/* Read one annotation. `channel` stays owned by the handle. */
SWD_API swd_status swd_annotations_get(const swd_annotations* annotations,
                                       size_t index, const char** channel,
                                       double* onset_s, double* duration_s,
                                       int* label);
/* Check that every annotation names a channel of `recording` and lies
 * inside its duration. */
SWD_API swd_status swd_annotations_validate(const swd_annotations* annotations,
                                            const swd_recording* recording);
SWD_API void swd_annotations_free(swd_annotations* annotations);

/* ---------------------------------------------------------------- *
 * Synthetic corpus generation                                      *
 * ---------------------------------------------------------------- */

typedef struct swd_synth_event {
    double onset_s;
    double duration_s;
    double cycle_hz;      /* spike-and-wave repetition rate */
    double amplitude_mv;  /* template peak amplitude */
} swd_synth_event;

/* Deterministic single-channel recording: t-location-scale background noise
 * with spike-plus-half-sine bursts at the given events, plus matching
 * label-1 annotations. Identical arguments give bitwise-identical output.
 * Either out-parameter may be NULL when not wanted. */
SWD_API swd_status swd_synth_generate(double sample_rate_hz, double duration_s,
                                      const char* channel,
                                      const swd_synth_event* events,
                                      size_t event_count, double background_mu,
                                      double background_sigma,
                                      double background_nu, uint64_t seed,
                                      swd_recording** recording_out,
                                      swd_annotations** annotations_out);

/* ---------------------------------------------------------------- *
 * Feature extraction                                               *
 * ---------------------------------------------------------------- */

typedef struct swd_feature_table swd_feature_table;

typedef struct swd_extract_options {
    size_t window_samples;    /* 0 = fit each channel whole (W = N) */
    double overlap_threshold; /* label-1 coverage fraction, default 0.5 */
    swd_fit_options fit;
} swd_extract_options;

typedef struct swd_extract_summary {
    size_t segments;      /* windows produced */
    size_t fitted;        /* rows in the table */
    size_t failed;        /* excluded (degenerate/too-short segments) */
    size_t not_converged; /* kept, but stopped at the iteration cap */
} swd_extract_summary;

/* Window every channel and fit each segment. `annotations` may be NULL
 * (unlabeled table); `options` may be NULL for defaults; `summary` may be
 * NULL. Rows are channel-major, time-ascending. */
SWD_API swd_status swd_extract(const swd_recording* recording,
                               const swd_annotations* annotations,
                               const swd_extract_options* options,
                               swd_feature_table** out,
                               swd_extract_summary* summary);
SWD_API swd_status swd_feature_table_load(const char* path,
                                          swd_feature_table** out);
SWD_API swd_status swd_feature_table_save(const swd_feature_table* table,
                                          const char* path);
SWD_API size_t swd_feature_table_size(const swd_feature_table* table);
/* 1 when every row carries a ground-truth label. */
SWD_API int swd_feature_table_labeled(const swd_feature_table* table);
/* Read one row; `label` receives -1 when the table is unlabeled. `channel`
 * stays owned by the handle. */
SWD_API swd_status swd_feature_table_row(const swd_feature_table* table,
                                         size_t index, const char** channel,
                                         size_t* start_index, double* mu,
                                         double* sigma, double* nu, int* label);
SWD_API void swd_feature_table_free(swd_feature_table* table);

/* Two-column-plus-label CSV of one parameter pair from a labeled table;
 * `pair` is "mu-sigma", "mu-nu", or "sigma-nu". */
SWD_API swd_status swd_scatter_save(const swd_feature_table* table,
                                    const char* pair, const char* path);

/* ---------------------------------------------------------------- *
 * Classifier                                                       *
 * ---------------------------------------------------------------- */

typedef struct swd_model swd_model;
typedef struct swd_predictions swd_predictions;

enum { SWD_SCALING_NONE = 0, SWD_SCALING_ZSCORE = 1 };

/* Train from a labeled feature table: store its vectors and labels, fit the
 * scaling statistics, and fix k. Both classes must be present. */
SWD_API swd_status swd_train(const swd_feature_table* table, size_t k,
                             int scaling_mode, swd_model** out);
/* Train from raw vectors: features is row-major count x 3. */
SWD_API swd_status swd_model_create(const double* features, const int* labels,
                                    size_t count, size_t k, int scaling_mode,
                                    swd_model** out);
SWD_API swd_status swd_model_save(const swd_model* model, const char* path);
SWD_API swd_status swd_model_load(const char* path, swd_model** out);
SWD_API size_t swd_model_size(const swd_model* model);
SWD_API size_t swd_model_k(const swd_model* model);

/* Classify one (mu, sigma, nu) query. `neighbor_indices` and
 * `neighbor_distances`, when non-NULL, must hold k entries each and receive
 * the k nearest training rows in ascending distance order. */
SWD_API swd_status swd_classify(const swd_model* model, const double query[3],
                                int* label, size_t* neighbor_indices,
                                double* neighbor_distances);

/* Classify every row of a feature table (labels in the table are ignored). */
SWD_API swd_status swd_classify_table(const swd_model* model,
                                      const swd_feature_table* table,
                                      swd_predictions** out);
SWD_API void swd_model_free(swd_model* model);

SWD_API swd_status swd_predictions_save(const swd_predictions* predictions,
                                        const char* path);
SWD_API swd_status swd_predictions_load(const char* path,
                                        swd_predictions** out);
SWD_API size_t swd_predictions_size(const swd_predictions* predictions);
SWD_API swd_status swd_predictions_row(const swd_predictions* predictions,
                                       size_t index, const char** channel,
                                       size_t* start_index, int* label,
                                       double* nearest_distance);
SWD_API void swd_predictions_free(swd_predictions* predictions);

/* ---------------------------------------------------------------- *
 * Evaluation                                                       *
 * ---------------------------------------------------------------- */

typedef struct swd_confusion {
    uint64_t tp;
    uint64_t tn;
    uint64_t fp;
    uint64_t fn;
} swd_confusion;

/* Tally predicted-vs-actual binary labels. */
SWD_API swd_status swd_confusion_counts(const int* predicted, const int* actual,
                                        size_t count, swd_confusion* out);

/* Accuracy, sensitivity tp/(tp+fn), specificity tn/(tn+fp). A rate whose
 * denominator is zero is reported as undefined via its *_defined flag (the
 * value is left untouched), never as NaN. Defined-flag pointers may be NULL
 * only together with the matching value pointer. */
SWD_API swd_status swd_rates(const swd_confusion* confusion, double* accuracy,
                             double* sensitivity, int* sensitivity_defined,
                             double* specificity, int* specificity_defined);

typedef struct swd_evaluation {
    swd_confusion per_segment;
    double segment_accuracy;
    double segment_sensitivity; /* meaningful only when the flag is 1 */
    int segment_sensitivity_defined;
    double segment_specificity;
    int segment_specificity_defined;
    /* Signal-level roll-up: a channel is positive when any segment is. */
    uint64_t signal_count;
    swd_confusion per_signal;
    double signal_accuracy;
    double signal_sensitivity;
    int signal_sensitivity_defined;
    double signal_specificity;
    int signal_specificity_defined;
} swd_evaluation;

/* Score predictions against a labeled truth table; rows must align
 * one-to-one on (channel, start_index). */
SWD_API swd_status swd_evaluate(const swd_predictions* predictions,
                                const swd_feature_table* truth,
                                swd_evaluation* out);

/* Fixed-layout textual report of an evaluation. The returned string is
 * heap-allocated; release it with swd_string_free. */
SWD_API swd_status swd_evaluation_format(const swd_evaluation* evaluation,
                                         char** out);
SWD_API void swd_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SWD_H */
