#include "core/metrics.hpp"

#include <string>

#include "core/error.hpp"

namespace swd {

ConfusionMatrix confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual) {
    if (predicted.size() != actual.size())
        raise(errc::length_mismatch,
              std::to_string(predicted.size()) + " predictions vs " +
                  std::to_string(actual.size()) + " ground-truth labels");
    if (predicted.empty())
        raise(errc::empty_input, "no (predicted, actual) pairs to score");

    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] != 0 && predicted[i] != 1)
            raise(errc::unknown_label,
                  "predicted label at index " + std::to_string(i) + " is not 0/1");
        if (actual[i] != 0 && actual[i] != 1)
            raise(errc::unknown_label,
                  "actual label at index " + std::to_string(i) + " is not 0/1");
        if (actual[i] == 1)
            predicted[i] == 1 ? ++cm.tp : ++cm.fn;
        else
            predicted[i] == 1 ? ++cm.fp : ++cm.tn;
    }
    return cm;
}

Rates rates(const ConfusionMatrix& cm) {
    Rates r;
    const std::size_t total = cm.total();
    if (total == 0)
        raise(errc::empty_input, "confusion matrix has no counts");
    r.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
    if (cm.tp + cm.fn > 0)
        r.sensitivity = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    if (cm.tn + cm.fp > 0)
        r.specificity = static_cast<double>(cm.tn) / static_cast<double>(cm.tn + cm.fp);
    return r;
}

} // namespace swd
