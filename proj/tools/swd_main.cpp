// Command-line front end for the spike-and-wave toolkit. Orchestrates the
// pipeline — synthesis, feature extraction, training, classification,
// evaluation, scatter export — entirely through the public C interface.
//
// Exit codes: 0 success, 2 usage or input error, 3 total computational
// failure (no segment could be fitted).

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swd/swd.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitComputeFailed = 3;

// Print the library's explanation of a failing call and return exit code 2.
int fail(swd_status status) {
    std::fprintf(stderr, "swd: error: %s (%s)\n", swd_last_error(),
                 swd_status_name(status));
    return kExitInput;
}

bool parse_field(const std::string& text, std::size_t& pos, double& out) {
    std::size_t used = 0;
    try {
        out = std::stod(text.substr(pos), &used);
    } catch (const std::exception&) {
        return false;
    }
    pos += used;
    return true;
}

// "onset_s,duration_s,cycle_hz,amplitude_mv" -> event record.
bool parse_event(const std::string& text, swd_synth_event& out) {
    std::size_t pos = 0;
    double* fields[4] = {&out.onset_s, &out.duration_s, &out.cycle_hz,
                         &out.amplitude_mv};
    for (int i = 0; i < 4; ++i) {
        if (!parse_field(text, pos, *fields[i])) return false;
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',') return false;
            ++pos;
        }
    }
    return pos == text.size();
}

struct FitFlags {
    double tol_x = 1e-8;
    double tol_f = 1e-8;
    int max_iter = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--tol-x", tol_x, "Simplex diameter tolerance")
            ->capture_default_str();
        cmd.add_option("--tol-f", tol_f, "Function spread tolerance")
            ->capture_default_str();
        cmd.add_option("--max-iter", max_iter,
                       "Iteration cap (0 = 200 x dimension)")
            ->capture_default_str();
    }

    swd_fit_options options() const { return {tol_x, tol_f, max_iter}; }
};

int run_extract(const std::string& recording_path, const std::string& annotations_path,
                const std::string& out_path, std::size_t window_samples,
                double overlap_threshold, const FitFlags& fit) {
    swd_recording* recording = nullptr;
    swd_status status = swd_recording_load(recording_path.c_str(), &recording);
    if (status != SWD_OK) return fail(status);

    swd_annotations* annotations = nullptr;
    if (!annotations_path.empty()) {
        status = swd_annotations_load(annotations_path.c_str(), &annotations);
        if (status == SWD_OK)
            status = swd_annotations_validate(annotations, recording);
        if (status != SWD_OK) {
            swd_recording_free(recording);
            return fail(status);
        }
    }

    swd_extract_options options{window_samples, overlap_threshold, fit.options()};
    swd_extract_summary summary{};
    swd_feature_table* table = nullptr;
    status = swd_extract(recording, annotations, &options, &table, &summary);
    swd_annotations_free(annotations);
    swd_recording_free(recording);
    if (status != SWD_OK) return fail(status);

    std::fprintf(stderr, "extract: %zu segments, %zu fitted, %zu excluded",
                 summary.segments, summary.fitted, summary.failed);
    if (summary.not_converged > 0)
        std::fprintf(stderr, " (%zu kept at the iteration cap)", summary.not_converged);
    std::fprintf(stderr, "\n");

    if (summary.fitted == 0) {
        swd_feature_table_free(table);
        std::fprintf(stderr, "swd: error: every segment fit failed\n");
        return kExitComputeFailed;
    }

    status = swd_feature_table_save(table, out_path.c_str());
    swd_feature_table_free(table);
    if (status != SWD_OK) return fail(status);
    return kExitOk;
}

int run_train(const std::string& features_path, const std::string& out_path,
              std::size_t k, const std::string& scaling) {
    swd_feature_table* table = nullptr;
    swd_status status = swd_feature_table_load(features_path.c_str(), &table);
    if (status != SWD_OK) return fail(status);

    const int mode = scaling == "zscore" ? SWD_SCALING_ZSCORE : SWD_SCALING_NONE;
    swd_model* model = nullptr;
    status = swd_train(table, k, mode, &model);
    if (status != SWD_OK) {
        swd_feature_table_free(table);
        return fail(status);
    }

    std::size_t counts[2] = {0, 0};
    for (std::size_t i = 0; i < swd_feature_table_size(table); ++i) {
        int label = -1;
        swd_feature_table_row(table, i, nullptr, nullptr, nullptr, nullptr, nullptr,
                              &label);
        if (label == 0 || label == 1) ++counts[label];
    }
    swd_feature_table_free(table);

    std::printf("trained: %zu vectors (%zu label-0, %zu label-1), k=%zu, scaling=%s\n",
                swd_model_size(model), counts[0], counts[1], swd_model_k(model),
                scaling.c_str());

    status = swd_model_save(model, out_path.c_str());
    swd_model_free(model);
    if (status != SWD_OK) return fail(status);
    return kExitOk;
}

int run_classify(const std::string& model_path, const std::string& features_path,
                 const std::string& out_path) {
    swd_model* model = nullptr;
    swd_status status = swd_model_load(model_path.c_str(), &model);
    if (status != SWD_OK) return fail(status);

    swd_feature_table* table = nullptr;
    status = swd_feature_table_load(features_path.c_str(), &table);
    if (status != SWD_OK) {
        swd_model_free(model);
        return fail(status);
    }

    swd_predictions* predictions = nullptr;
    status = swd_classify_table(model, table, &predictions);
    swd_feature_table_free(table);
    swd_model_free(model);
    if (status != SWD_OK) return fail(status);

    std::printf("classified: %zu rows\n", swd_predictions_size(predictions));
    status = swd_predictions_save(predictions, out_path.c_str());
    swd_predictions_free(predictions);
    if (status != SWD_OK) return fail(status);
    return kExitOk;
}

int run_evaluate(const std::string& predictions_path, const std::string& truth_path,
                 const std::string& out_path) {
    swd_predictions* predictions = nullptr;
    swd_status status = swd_predictions_load(predictions_path.c_str(), &predictions);
    if (status != SWD_OK) return fail(status);

    swd_feature_table* truth = nullptr;
    status = swd_feature_table_load(truth_path.c_str(), &truth);
    if (status != SWD_OK) {
        swd_predictions_free(predictions);
        return fail(status);
    }

    swd_evaluation evaluation{};
    status = swd_evaluate(predictions, truth, &evaluation);
    swd_feature_table_free(truth);
    swd_predictions_free(predictions);
    if (status != SWD_OK) return fail(status);

    char* report = nullptr;
    status = swd_evaluation_format(&evaluation, &report);
    if (status != SWD_OK) return fail(status);
    std::fputs(report, stdout);

    int code = kExitOk;
    if (!out_path.empty()) {
        std::FILE* file = std::fopen(out_path.c_str(), "w");
        if (!file || std::fputs(report, file) == EOF) {
            std::fprintf(stderr, "swd: error: cannot write %s\n", out_path.c_str());
            code = kExitInput;
        }
        if (file) std::fclose(file);
    }
    swd_string_free(report);
    return code;
}

int run_scatter(const std::string& features_path, const std::string& pair,
                const std::string& out_path) {
    swd_feature_table* table = nullptr;
    swd_status status = swd_feature_table_load(features_path.c_str(), &table);
    if (status != SWD_OK) return fail(status);

    status = swd_scatter_save(table, pair.c_str(), out_path.c_str());
    const std::size_t rows = swd_feature_table_size(table);
    swd_feature_table_free(table);
    if (status != SWD_OK) return fail(status);
    std::printf("scatter: wrote %zu %s rows\n", rows, pair.c_str());
    return kExitOk;
}

int run_synth(double duration, double rate, const std::string& channel,
              const std::vector<std::string>& event_specs, double bg_mu,
              double bg_sigma, double bg_nu, std::uint64_t seed,
              const std::string& recording_path, const std::string& annotations_path) {
    std::vector<swd_synth_event> events;
    events.reserve(event_specs.size());
    for (const auto& text : event_specs) {
        swd_synth_event ev{};
        if (!parse_event(text, ev)) {
            std::fprintf(stderr,
                         "swd: error: bad --event '%s' "
                         "(expected onset_s,duration_s,cycle_hz,amplitude_mv)\n",
                         text.c_str());
            return kExitInput;
        }
        events.push_back(ev);
    }

    swd_recording* recording = nullptr;
    swd_annotations* annotations = nullptr;
    swd_status status = swd_synth_generate(
        rate, duration, channel.c_str(), events.data(), events.size(), bg_mu,
        bg_sigma, bg_nu, seed, &recording, &annotations);
    if (status != SWD_OK) return fail(status);

    status = swd_recording_save(recording, recording_path.c_str());
    if (status == SWD_OK && !annotations_path.empty())
        status = swd_annotations_save(annotations, annotations_path.c_str());
    swd_annotations_free(annotations);
    swd_recording_free(recording);
    if (status != SWD_OK) return fail(status);

    std::printf("synth: %s, %.17g s at %.17g Hz, %zu events\n", channel.c_str(),
                duration, rate, events.size());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spike-and-wave detection by t-location-scale fitting and kNN"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(swd_version()));

    // extract
    auto* extract = app.add_subcommand(
        "extract", "Fit features to every window of a recording");
    std::string recording_path, annotations_path, out_path;
    std::size_t window_samples = 256;
    double overlap_threshold = 0.5;
    FitFlags fit;
    extract->add_option("recording", recording_path, "Recording CSV")->required();
    extract->add_option("--annotations", annotations_path,
                        "Annotation CSV for ground-truth labels");
    extract->add_option("-o,--out", out_path, "Feature table to write")->required();
    extract
        ->add_option("--window-samples", window_samples,
                     "Window length W in samples (0 = whole channel)")
        ->capture_default_str();
    extract
        ->add_option("--overlap-threshold", overlap_threshold,
                     "Label-1 coverage fraction for a positive segment")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    fit.attach(*extract);

    // train
    auto* train = app.add_subcommand("train", "Train the kNN classifier");
    std::string train_features, model_out, scaling = "none";
    std::size_t k = 1;
    train->add_option("features", train_features, "Labeled feature table")->required();
    train->add_option("-o,--out", model_out, "Model file to write")->required();
    train->add_option("--k", k, "Neighbor count")->capture_default_str();
    train->add_option("--scaling", scaling, "Feature scaling")
        ->check(CLI::IsMember({"none", "zscore"}))
        ->capture_default_str();

    // classify
    auto* classify = app.add_subcommand("classify", "Classify a feature table");
    std::string model_path, classify_features, predictions_out;
    classify->add_option("model", model_path, "Trained model file")->required();
    classify->add_option("features", classify_features, "Feature table")->required();
    classify->add_option("-o,--out", predictions_out, "Predictions file to write")
        ->required();

    // evaluate
    auto* evaluate = app.add_subcommand(
        "evaluate", "Score predictions against a labeled table");
    std::string eval_predictions, eval_truth, report_out;
    evaluate->add_option("predictions", eval_predictions, "Predictions file")
        ->required();
    evaluate->add_option("truth", eval_truth, "Labeled feature table")->required();
    evaluate->add_option("-o,--out", report_out, "Also write the report here");

    // scatter
    auto* scatter = app.add_subcommand(
        "scatter", "Export a parameter pair for plotting");
    std::string scatter_features, pair, scatter_out;
    scatter->add_option("features", scatter_features, "Labeled feature table")
        ->required();
    scatter->add_option("--pair", pair, "Parameter pair")
        ->check(CLI::IsMember({"mu-sigma", "mu-nu", "sigma-nu"}))
        ->required();
    scatter->add_option("-o,--out", scatter_out, "Scatter CSV to write")->required();

    // synth
    auto* synth = app.add_subcommand(
        "synth", "Generate a synthetic recording with known events");
    double duration = 0.0, rate = 256.0;
    double bg_mu = 0.0, bg_sigma = 20.0, bg_nu = 4.0;
    std::uint64_t seed = 0;
    std::string channel = "Cz", synth_recording, synth_annotations;
    std::vector<std::string> event_specs;
    synth->add_option("--duration", duration, "Recording length in seconds")
        ->required();
    synth->add_option("--rate", rate, "Sample rate in Hz")->capture_default_str();
    synth->add_option("--channel", channel, "Channel name")->capture_default_str();
    synth->add_option("--event", event_specs,
                      "Spike-and-wave event onset_s,duration_s,cycle_hz,amplitude_mv "
                      "(repeatable)");
    synth->add_option("--bg-mu", bg_mu, "Background location (mV)")
        ->capture_default_str();
    synth->add_option("--bg-sigma", bg_sigma, "Background scale (mV)")
        ->capture_default_str();
    synth->add_option("--bg-nu", bg_nu, "Background shape")->capture_default_str();
    synth->add_option("--seed", seed, "Generator seed")->capture_default_str();
    synth->add_option("-o,--out-recording", synth_recording, "Recording CSV to write")
        ->required();
    synth->add_option("--out-annotations", synth_annotations,
                      "Annotation CSV to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (extract->parsed())
        return run_extract(recording_path, annotations_path, out_path, window_samples,
                           overlap_threshold, fit);
    if (train->parsed()) return run_train(train_features, model_out, k, scaling);
    if (classify->parsed())
        return run_classify(model_path, classify_features, predictions_out);
    if (evaluate->parsed()) return run_evaluate(eval_predictions, eval_truth, report_out);
    if (scatter->parsed()) return run_scatter(scatter_features, pair, scatter_out);
    if (synth->parsed())
        return run_synth(duration, rate, channel, event_specs, bg_mu, bg_sigma, bg_nu,
                         seed, synth_recording, synth_annotations);
    return kExitInput;
}
