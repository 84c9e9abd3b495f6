#include "core/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/text.hpp"

namespace swd {

bool FeatureTable::labeled() const {
    if (rows.empty()) return false;
    return std::all_of(rows.begin(), rows.end(),
                       [](const FeatureRow& r) { return r.label.has_value(); });
}

std::vector<FeatureVector> FeatureTable::feature_vectors() const {
    std::vector<FeatureVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back({r.params.mu, r.params.sigma, r.params.nu});
    return out;
}

std::vector<int> FeatureTable::label_values() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        if (!r.label)
            raise(errc::schema_violation, "feature table row has no label");
        out.push_back(*r.label);
    }
    return out;
}

FeatureTable extract_features(const Recording& recording,
                              const std::vector<Annotation>* annotations,
                              const ExtractOptions& options,
                              ExtractSummary* summary) {
    if (annotations)
        validate_annotations(*annotations, recording);

    WindowSpec spec;
    spec.window_len_samples =
        options.window_samples == 0 ? recording.sample_count : options.window_samples;

    ExtractSummary local;
    FeatureTable table;
    for (const auto& channel : recording.channels) {
        for (auto& segment : segment_channel(recording, channel, spec)) {
            ++local.segments;
            FeatureRow row;
            row.channel = channel;
            row.start_index = segment.start_index;
            try {
                const FitReport report = fit_mle(segment.samples, options.fit);
                if (!report.converged) ++local.not_converged;
                row.params = report.params;
            } catch (const error& e) {
                ++local.failed;
                local.failures.push_back(channel + "[" +
                                         std::to_string(segment.start_index) +
                                         "]: " + e.what());
                continue;
            }
            if (annotations)
                row.label = label_segment(segment, *annotations,
                                          recording.sample_rate_hz,
                                          options.overlap_threshold);
            ++local.fitted;
            table.rows.push_back(std::move(row));
        }
    }
    if (summary) *summary = std::move(local);
    return table;
}

void save_feature_table(const FeatureTable& table, const std::string& path) {
    const bool with_labels = table.labeled();
    if (!table.rows.empty() && !with_labels)
        for (const auto& r : table.rows)
            if (r.label)
                raise(errc::schema_violation,
                      "feature table mixes labeled and unlabeled rows");

    std::ofstream out(path, std::ios::trunc);
    if (!out)
        raise(errc::io_failure, "cannot write " + path);
    out << (with_labels ? "# channel,start_index,mu,sigma,nu,label\n"
                        : "# channel,start_index,mu,sigma,nu\n");
    for (const auto& r : table.rows) {
        out << r.channel << ',' << r.start_index << ',' << format_double(r.params.mu)
            << ',' << format_double(r.params.sigma) << ',' << format_double(r.params.nu);
        if (with_labels) out << ',' << *r.label;
        out << '\n';
    }
    if (!out.flush())
        raise(errc::io_failure, "failed writing " + path);
}

FeatureTable load_feature_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::missing_file, "cannot open " + path);

    FeatureTable table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view record = trim(line);
        if (record.empty() || record.front() == '#') continue;

        const auto where = path + ": line " + std::to_string(line_no);
        const auto fields = split(record, ',');
        if (fields.size() != 5 && fields.size() != 6)
            raise(errc::malformed_line,
                  where + ": expected channel,start_index,mu,sigma,nu[,label]");
        if (width == 0)
            width = fields.size();
        else if (fields.size() != width)
            raise(errc::inconsistent_row_width,
                  where + ": row width differs from first data row");

        FeatureRow row;
        const std::string_view channel = trim(fields[0]);
        if (!valid_channel_name(channel))
            raise(errc::malformed_line, where + ": invalid channel name");
        row.channel = std::string(channel);

        long start = 0;
        if (!parse_long(trim(fields[1]), start) || start < 0)
            raise(errc::malformed_line, where + ": unreadable start index");
        row.start_index = static_cast<std::size_t>(start);

        if (!parse_double(trim(fields[2]), row.params.mu) ||
            !parse_double(trim(fields[3]), row.params.sigma) ||
            !parse_double(trim(fields[4]), row.params.nu))
            raise(errc::malformed_line, where + ": unreadable parameter value");
        if (!(row.params.sigma > 0.0) || !(row.params.nu > 0.0))
            raise(errc::malformed_line, where + ": sigma and nu must be positive");

        if (width == 6) {
            long label = 0;
            if (!parse_long(trim(fields[5]), label) || (label != 0 && label != 1))
                raise(errc::unknown_label, where + ": label must be 0 or 1");
            row.label = static_cast<int>(label);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void save_predictions(const std::vector<PredictionRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        raise(errc::io_failure, "cannot write " + path);
    out << "# channel,start_index,label,nearest_distance\n";
    for (const auto& r : rows)
        out << r.channel << ',' << r.start_index << ',' << r.label << ','
            << format_double(r.nearest_distance) << '\n';
    if (!out.flush())
        raise(errc::io_failure, "failed writing " + path);
}

std::vector<PredictionRow> load_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::missing_file, "cannot open " + path);

    std::vector<PredictionRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view record = trim(line);
        if (record.empty() || record.front() == '#') continue;

        const auto where = path + ": line " + std::to_string(line_no);
        const auto fields = split(record, ',');
        if (fields.size() != 4)
            raise(errc::malformed_line,
                  where + ": expected channel,start_index,label,nearest_distance");

        PredictionRow row;
        const std::string_view channel = trim(fields[0]);
        if (!valid_channel_name(channel))
            raise(errc::malformed_line, where + ": invalid channel name");
        row.channel = std::string(channel);

        long start = 0;
        if (!parse_long(trim(fields[1]), start) || start < 0)
            raise(errc::malformed_line, where + ": unreadable start index");
        row.start_index = static_cast<std::size_t>(start);

        long label = 0;
        if (!parse_long(trim(fields[2]), label) || (label != 0 && label != 1))
            raise(errc::unknown_label, where + ": label must be 0 or 1");
        row.label = static_cast<int>(label);

        if (!parse_double(trim(fields[3]), row.nearest_distance) ||
            !(row.nearest_distance >= 0.0))
            raise(errc::malformed_line, where + ": unreadable distance");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PredictionRow> classify_table(const FeatureTable& table,
                                          const LabeledDataset& dataset,
                                          const KnnConfig& config) {
    if (table.rows.empty())
        raise(errc::empty_input, "feature table has no rows to classify");
    const auto predictions = classify_batch(table.feature_vectors(), dataset, config);
    std::vector<PredictionRow> rows;
    rows.reserve(predictions.size());
    for (std::size_t i = 0; i < predictions.size(); ++i)
        rows.push_back({table.rows[i].channel, table.rows[i].start_index,
                        predictions[i].label, predictions[i].neighbor_distances.front()});
    return rows;
}

std::optional<ScatterPair> parse_scatter_pair(const std::string& name) {
    if (name == "mu-sigma") return ScatterPair::mu_sigma;
    if (name == "mu-nu") return ScatterPair::mu_nu;
    if (name == "sigma-nu") return ScatterPair::sigma_nu;
    return std::nullopt;
}

void save_scatter(const FeatureTable& table, ScatterPair pair, const std::string& path) {
    if (!table.labeled())
        raise(errc::unknown_label, "scatter export needs a labeled feature table");

    const char* header = pair == ScatterPair::mu_sigma  ? "# mu,sigma,label\n"
                         : pair == ScatterPair::mu_nu   ? "# mu,nu,label\n"
                                                        : "# sigma,nu,label\n";
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        raise(errc::io_failure, "cannot write " + path);
    out << header;
    for (const auto& r : table.rows) {
        double a = 0.0, b = 0.0;
        switch (pair) {
        case ScatterPair::mu_sigma: a = r.params.mu; b = r.params.sigma; break;
        case ScatterPair::mu_nu: a = r.params.mu; b = r.params.nu; break;
        case ScatterPair::sigma_nu: a = r.params.sigma; b = r.params.nu; break;
        }
        out << format_double(a) << ',' << format_double(b) << ',' << *r.label << '\n';
    }
    if (!out.flush())
        raise(errc::io_failure, "failed writing " + path);
}

namespace {

void append_rates(std::ostringstream& out, const ConfusionMatrix& cm, const Rates& r) {
    out << "tp=" << cm.tp << " tn=" << cm.tn << " fp=" << cm.fp << " fn=" << cm.fn
        << " accuracy=" << format_double(r.accuracy) << " sensitivity="
        << (r.sensitivity ? format_double(*r.sensitivity) : "undefined")
        << " specificity="
        << (r.specificity ? format_double(*r.specificity) : "undefined") << '\n';
}

} // namespace

EvaluationReport evaluate(const std::vector<PredictionRow>& predictions,
                          const FeatureTable& truth) {
    if (predictions.size() != truth.rows.size())
        raise(errc::length_mismatch,
              std::to_string(predictions.size()) + " predictions vs " +
                  std::to_string(truth.rows.size()) + " truth rows");
    if (predictions.empty())
        raise(errc::empty_input, "nothing to evaluate");
    if (!truth.labeled())
        raise(errc::unknown_label, "truth table is unlabeled");

    std::vector<int> predicted, actual;
    predicted.reserve(predictions.size());
    actual.reserve(predictions.size());
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i].channel != truth.rows[i].channel ||
            predictions[i].start_index != truth.rows[i].start_index)
            raise(errc::schema_violation,
                  "row " + std::to_string(i + 1) +
                      ": prediction and truth refer to different segments");
        predicted.push_back(predictions[i].label);
        actual.push_back(*truth.rows[i].label);
    }

    EvaluationReport report;
    report.per_segment = confusion(predicted, actual);
    report.segment_rates = rates(report.per_segment);

    // Per-signal roll-up: a channel is positive when any segment is.
    std::vector<std::string> order;
    std::vector<int> signal_pred, signal_actual;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const auto at = std::find(order.begin(), order.end(), predictions[i].channel);
        std::size_t idx;
        if (at == order.end()) {
            idx = order.size();
            order.push_back(predictions[i].channel);
            signal_pred.push_back(0);
            signal_actual.push_back(0);
        } else {
            idx = static_cast<std::size_t>(at - order.begin());
        }
        signal_pred[idx] |= predicted[i];
        signal_actual[idx] |= actual[i];
    }
    report.signal_count = order.size();
    report.per_signal = confusion(signal_pred, signal_actual);
    report.signal_rates = rates(report.per_signal);
    return report;
}

std::string format_report(const EvaluationReport& report) {
    std::ostringstream out;
    out << "segments=" << report.per_segment.total() << '\n' << "per-segment: ";
    append_rates(out, report.per_segment, report.segment_rates);
    out << "signals=" << report.signal_count << '\n' << "per-signal: ";
    append_rates(out, report.per_signal, report.signal_rates);
    return out.str();
}

} // namespace swd
