#include "core/model_io.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "core/error.hpp"

namespace swd {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* scaling_mode_name(ScalingMode mode) {
    return mode == ScalingMode::zscore ? "zscore" : "none";
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    raise(errc::schema_violation, path + ": " + what);
}

} // namespace

void save_model(const Model& model, const std::string& path) {
    const auto& ds = model.dataset;
    if (ds.features.empty())
        raise(errc::empty_dataset, "refusing to save a model with no training vectors");
    if (ds.features.size() != ds.labels.size())
        raise(errc::schema_violation, "feature/label count mismatch in model");

    ordered_json doc;
    doc["version"] = kModelSchemaVersion;
    ordered_json scaling;
    scaling["mode"] = scaling_mode_name(model.config.scaling.mode);
    if (model.config.scaling.mode == ScalingMode::zscore) {
        scaling["mean"] = model.config.scaling.mean;
        scaling["stddev"] = model.config.scaling.stddev;
    }
    doc["scaling"] = std::move(scaling);
    doc["k"] = model.config.k;
    doc["metric"] = "euclidean";
    doc["vote"] = "equal_weight";
    doc["features"] = ds.features;
    doc["labels"] = ds.labels;

    std::ofstream out(path, std::ios::trunc);
    if (!out)
        raise(errc::io_failure, "cannot write " + path);
    out << doc.dump(2) << '\n';
    if (!out.flush())
        raise(errc::io_failure, "failed writing " + path);
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::io_failure, "cannot open " + path);

    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        schema_error(path, e.what());
    }

    try {
        if (!doc.contains("version"))
            schema_error(path, "missing version field");
        const int version = doc.at("version").get<int>();
        if (version != kModelSchemaVersion)
            raise(errc::unsupported_version,
                  path + ": schema version " + std::to_string(version) +
                      " (this build reads version " +
                      std::to_string(kModelSchemaVersion) + ")");

        Model model;
        const auto& scaling = doc.at("scaling");
        const std::string mode = scaling.at("mode").get<std::string>();
        if (mode == "none") {
            model.config.scaling.mode = ScalingMode::none;
        } else if (mode == "zscore") {
            model.config.scaling.mode = ScalingMode::zscore;
            model.config.scaling.mean = scaling.at("mean").get<FeatureVector>();
            model.config.scaling.stddev = scaling.at("stddev").get<FeatureVector>();
            for (double sd : model.config.scaling.stddev)
                if (!(sd > 0.0) || !std::isfinite(sd))
                    schema_error(path, "zscore stddev must be positive");
        } else {
            schema_error(path, "unknown scaling mode '" + mode + "'");
        }

        model.config.k = doc.at("k").get<std::size_t>();
        if (doc.at("metric").get<std::string>() != "euclidean")
            schema_error(path, "unknown metric");
        if (doc.at("vote").get<std::string>() != "equal_weight")
            schema_error(path, "unknown vote rule");

        model.dataset.features = doc.at("features").get<std::vector<FeatureVector>>();
        model.dataset.labels = doc.at("labels").get<std::vector<int>>();

        if (model.dataset.features.empty())
            schema_error(path, "model declares no training vectors");
        if (model.dataset.features.size() != model.dataset.labels.size())
            schema_error(path, "feature/label count mismatch");
        for (const auto& f : model.dataset.features)
            for (double v : f)
                if (!std::isfinite(v))
                    schema_error(path, "non-finite feature component");
        for (int label : model.dataset.labels)
            if (label != 0 && label != 1)
                schema_error(path, "label outside {0,1}");
        if (model.config.k < 1 || model.config.k > model.dataset.features.size())
            schema_error(path, "k outside [1, training size]");
        return model;
    } catch (const nlohmann::json::exception& e) {
        schema_error(path, e.what());
    }
}

} // namespace swd
