#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "core/error.hpp"
#include "core/metrics.hpp"
#include "core/rng.hpp"

using namespace swd;

TEST_CASE("a perfect prediction fills the diagonal") {
    const std::vector<int> labels{1, 1, 0, 1, 0};
    const auto cm = confusion(labels, labels);
    CHECK(cm.tp == 3);
    CHECK(cm.tn == 2);
    CHECK(cm.fp == 0);
    CHECK(cm.fn == 0);
    const auto r = rates(cm);
    CHECK(r.accuracy == 1.0);
    CHECK(r.sensitivity == 1.0);
    CHECK(r.specificity == 1.0);
}

TEST_CASE("each cell of the confusion matrix is reachable") {
    // predicted vs actual: (1,1)=tp, (0,1)=fn, (1,0)=fp, (0,0)=tn.
    const auto cm = confusion({1, 0, 1, 0}, {1, 1, 0, 0});
    CHECK(cm.tp == 1);
    CHECK(cm.fn == 1);
    CHECK(cm.fp == 1);
    CHECK(cm.tn == 1);
    CHECK(cm.total() == 4);
}

TEST_CASE("the all-correct 192-sample split scores exactly one") {
    const Rates r = rates({96, 96, 0, 0});
    CHECK(r.accuracy == 1.0);
    REQUIRE(r.sensitivity.has_value());
    REQUIRE(r.specificity.has_value());
    CHECK(*r.sensitivity == 1.0);
    CHECK(*r.specificity == 1.0);
}

TEST_CASE("rates come out as exact small fractions") {
    const Rates r = rates({3, 2, 2, 1}); // tp tn fp fn
    CHECK(r.accuracy == 0.625);          // 5 / 8
    CHECK(*r.sensitivity == 0.75);       // 3 / 4
    CHECK(*r.specificity == 0.5);        // 2 / 4
}

TEST_CASE("rates without positives or negatives are absent, not zero") {
    const Rates no_positives = rates({0, 5, 5, 0});
    CHECK_FALSE(no_positives.sensitivity.has_value());
    CHECK(no_positives.specificity == 0.5);

    const Rates no_negatives = rates({4, 0, 0, 4});
    CHECK(no_negatives.sensitivity == 0.5);
    CHECK_FALSE(no_negatives.specificity.has_value());
}

TEST_CASE("swapping label polarity transposes the matrix") {
    const std::vector<int> predicted{1, 0, 1, 1, 0, 0, 1};
    const std::vector<int> actual{1, 1, 0, 1, 0, 1, 0};
    const auto cm = confusion(predicted, actual);

    std::vector<int> flipped_pred(predicted.size()), flipped_act(actual.size());
    std::transform(predicted.begin(), predicted.end(), flipped_pred.begin(),
                   [](int v) { return 1 - v; });
    std::transform(actual.begin(), actual.end(), flipped_act.begin(),
                   [](int v) { return 1 - v; });
    const auto swapped = confusion(flipped_pred, flipped_act);
    CHECK(swapped.tp == cm.tn);
    CHECK(swapped.tn == cm.tp);
    CHECK(swapped.fp == cm.fn);
    CHECK(swapped.fn == cm.fp);
}

TEST_CASE("the tally is invariant under permuting the pairs") {
    Philox4x32 rng(3);
    std::vector<int> predicted, actual;
    for (int i = 0; i < 64; ++i) {
        predicted.push_back(rng.next_uniform() < 0.4 ? 1 : 0);
        actual.push_back(rng.next_uniform() < 0.5 ? 1 : 0);
    }
    const auto base = confusion(predicted, actual);

    std::vector<std::size_t> order(predicted.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Deterministic Fisher-Yates using the same generator.
    for (std::size_t i = order.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.next_uniform() * static_cast<double>(i));
        std::swap(order[i - 1], order[j]);
    }
    std::vector<int> p2, a2;
    for (std::size_t idx : order) {
        p2.push_back(predicted[idx]);
        a2.push_back(actual[idx]);
    }
    const auto shuffled = confusion(p2, a2);
    CHECK(shuffled.tp == base.tp);
    CHECK(shuffled.tn == base.tn);
    CHECK(shuffled.fp == base.fp);
    CHECK(shuffled.fn == base.fn);
}

TEST_CASE("confusion input validation") {
    try {
        static_cast<void>(confusion({1, 0}, {1}));
        FAIL("expected length_mismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::length_mismatch);
    }
    try {
        static_cast<void>(confusion({}, {}));
        FAIL("expected empty_input");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_input);
    }
    try {
        static_cast<void>(confusion({2, 0}, {1, 0}));
        FAIL("expected unknown_label");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_label);
    }
    try {
        static_cast<void>(confusion({1, 0}, {1, -1}));
        FAIL("expected unknown_label");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_label);
    }
    try {
        static_cast<void>(rates({0, 0, 0, 0}));
        FAIL("expected empty_input");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_input);
    }
}
