#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace swd {

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + tn + fp + fn; }
};

// Derived rates. Sensitivity and specificity are absent (not 0, not NaN)
// when their denominator is empty, so single-class test sets cannot be
// silently misreported.
struct Rates {
    double accuracy = 0.0;
    std::optional<double> sensitivity; // tp / (tp + fn)
    std::optional<double> specificity; // tn / (tn + fp)
};

// Tally (predicted, actual) label pairs. Throws length_mismatch or
// empty_input.
ConfusionMatrix confusion(const std::vector<int>& predicted,
                          const std::vector<int>& actual);

Rates rates(const ConfusionMatrix& cm);

} // namespace swd
