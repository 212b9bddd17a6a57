#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "darkdetect/errors.hpp"
#include "darkdetect/eval.hpp"
#include "darkdetect/rng.hpp"

using namespace darkdetect;

namespace {

std::vector<Label> balanced_labels(std::size_t per_class) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < per_class; ++i) labels.push_back(Label::dark);
    for (std::size_t i = 0; i < per_class; ++i) labels.push_back(Label::non_dark);
    return labels;
}

// O(P*N) pairwise oracle: ties count one half.
double auc_bruteforce(const std::vector<double>& scores, const std::vector<Label>& labels) {
    double wins = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (labels[i] != Label::dark) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j] != Label::non_dark) continue;
            ++pairs;
            if (scores[i] > scores[j]) wins += 1.0;
            else if (scores[i] == scores[j]) wins += 0.5;
        }
    }
    return wins / static_cast<double>(pairs);
}

}  // namespace

TEST_CASE("stratified_kfold balances classes per fold") {
    SUBCASE("exact divisibility: 10+10 into 5 folds") {
        auto labels = balanced_labels(10);
        FoldAssignment folds = stratified_kfold(labels, 5, 1);
        std::vector<std::size_t> dark_per_fold(5, 0), non_dark_per_fold(5, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == Label::dark) ++dark_per_fold[folds.fold_of[i]];
            else ++non_dark_per_fold[folds.fold_of[i]];
        }
        for (std::size_t f = 0; f < 5; ++f) {
            CHECK(dark_per_fold[f] == 2);
            CHECK(non_dark_per_fold[f] == 2);
        }
    }
    SUBCASE("2,356 samples: fold sizes 472,471,471,471,471") {
        auto labels = balanced_labels(1178);
        FoldAssignment folds = stratified_kfold(labels, 5, 42);
        std::vector<std::size_t> sizes = folds.fold_sizes();
        std::vector<std::size_t> sorted = sizes;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::size_t>{471, 471, 471, 471, 472});

        std::vector<std::size_t> dark_per_fold(5, 0), non_dark_per_fold(5, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == Label::dark) ++dark_per_fold[folds.fold_of[i]];
            else ++non_dark_per_fold[folds.fold_of[i]];
        }
        for (std::size_t f = 0; f < 5; ++f) {
            CHECK(dark_per_fold[f] >= 235);
            CHECK(dark_per_fold[f] <= 236);
            CHECK(non_dark_per_fold[f] >= 235);
            CHECK(non_dark_per_fold[f] <= 236);
        }
    }
    SUBCASE("same seed gives the identical assignment") {
        auto labels = balanced_labels(33);
        FoldAssignment a = stratified_kfold(labels, 5, 9);
        FoldAssignment b = stratified_kfold(labels, 5, 9);
        CHECK(a.fold_of == b.fold_of);
    }
    SUBCASE("folds partition the dataset") {
        auto labels = balanced_labels(17);
        FoldAssignment folds = stratified_kfold(labels, 4, 3);
        CHECK(folds.fold_of.size() == labels.size());
        for (std::uint32_t f : folds.fold_of) CHECK(f < 4);
        std::size_t total = 0;
        for (std::size_t s : folds.fold_sizes()) total += s;
        CHECK(total == labels.size());
    }
    SUBCASE("class smaller than k is an error") {
        std::vector<Label> labels{Label::dark, Label::dark, Label::non_dark, Label::non_dark,
                                  Label::non_dark};
        CHECK_THROWS_AS(stratified_kfold(labels, 3, 1), DataError);
        CHECK_THROWS_AS(stratified_kfold(labels, 1, 1), DataError);
    }
}

TEST_CASE("compute_metrics matches a hand confusion matrix") {
    SUBCASE("all correct") {
        std::vector<double> scores{0.9, 0.8, 0.1, 0.2};
        std::vector<Label> labels{Label::dark, Label::dark, Label::non_dark, Label::non_dark};
        Metrics m = compute_metrics(scores, labels, 0.5);
        CHECK(m.accuracy == 1.0);
        CHECK(m.f1 == 1.0);
    }
    SUBCASE("TP=2 FP=1 FN=1 TN=6") {
        std::vector<double> scores{0.9, 0.9, 0.9, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
        std::vector<Label> labels{Label::dark,     Label::dark,     Label::non_dark,
                                  Label::dark,     Label::non_dark, Label::non_dark,
                                  Label::non_dark, Label::non_dark, Label::non_dark,
                                  Label::non_dark};
        Metrics m = compute_metrics(scores, labels, 0.5);
        CHECK(m.precision == doctest::Approx(2.0 / 3.0));
        CHECK(m.recall == doctest::Approx(2.0 / 3.0));
        CHECK(m.accuracy == doctest::Approx(0.8));
        CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("no predicted positives: precision and f1 are 0 by convention") {
        std::vector<double> scores{0.1, 0.2};
        std::vector<Label> labels{Label::dark, Label::non_dark};
        Metrics m = compute_metrics(scores, labels, 0.5);
        CHECK(m.precision == 0.0);
        CHECK(m.f1 == 0.0);
    }
    SUBCASE("accuracy is exactly (TP+TN)/n") {
        std::vector<double> scores{0.6, 0.4, 0.6, 0.4, 0.6};
        std::vector<Label> labels{Label::dark, Label::dark, Label::non_dark, Label::non_dark,
                                  Label::dark};
        Metrics m = compute_metrics(scores, labels, 0.5);
        CHECK(m.accuracy == doctest::Approx(3.0 / 5.0));
    }
}

TEST_CASE("compute_auc") {
    SUBCASE("perfect separation") {
        std::vector<double> scores{0.9, 0.8, 0.2, 0.1};
        std::vector<Label> labels{Label::dark, Label::dark, Label::non_dark, Label::non_dark};
        CHECK(compute_auc(scores, labels) == 1.0);
    }
    SUBCASE("all scores equal") {
        std::vector<double> scores{0.5, 0.5, 0.5, 0.5};
        std::vector<Label> labels{Label::dark, Label::dark, Label::non_dark, Label::non_dark};
        CHECK(compute_auc(scores, labels) == 0.5);
    }
    SUBCASE("single class is an error") {
        std::vector<double> scores{0.5, 0.6};
        std::vector<Label> labels{Label::dark, Label::dark};
        CHECK_THROWS_AS(compute_auc(scores, labels), SingleClassError);
    }
    SUBCASE("rank formulation equals the pairwise oracle on random instances") {
        Rng rng(555);
        for (int instance = 0; instance < 100; ++instance) {
            std::size_t n = 4 + rng.bounded(47);  // up to 50
            std::vector<double> scores;
            std::vector<Label> labels;
            bool has_dark = false, has_non_dark = false;
            for (std::size_t i = 0; i < n; ++i) {
                // Coarse score grid to provoke plenty of ties.
                scores.push_back(static_cast<double>(rng.bounded(8)) / 7.0);
                labels.push_back(rng.bounded(2) ? Label::dark : Label::non_dark);
                (labels.back() == Label::dark ? has_dark : has_non_dark) = true;
            }
            if (!has_dark) labels[0] = Label::dark;
            if (!has_non_dark) labels[labels.size() - 1] = Label::non_dark;
            double fast = compute_auc(scores, labels);
            double slow = auc_bruteforce(scores, labels);
            CHECK(std::abs(fast - slow) <= 1e-12);
        }
    }
}

namespace {

// Two classes with disjoint vocabularies: trivially separable.
Dataset separable_dataset() {
    Dataset ds;
    const char* dark_words[] = {"hurry", "left", "stock", "ends", "claimed"};
    const char* benign_words[] = {"shipping", "policy", "размер", "guide", "about"};
    for (int i = 0; i < 10; ++i) {
        std::string dark_text = std::string(dark_words[i % 5]) + " " + dark_words[(i + 1) % 5] +
                                " " + dark_words[(i + 2) % 5];
        ds.samples.push_back({dark_text, Label::dark, "d" + std::to_string(i), "", ""});
    }
    for (int i = 0; i < 10; ++i) {
        std::string benign_text = std::string(benign_words[i % 5]) + " " +
                                  benign_words[(i + 1) % 5] + " " + benign_words[(i + 2) % 5];
        ds.samples.push_back({benign_text, Label::non_dark, "n" + std::to_string(i), "", ""});
    }
    return ds;
}

}  // namespace

TEST_CASE("cross_validate reaches accuracy 1.0 on a separable dataset") {
    CrossValidationConfig cfg;
    cfg.k = 5;
    cfg.train.kind = ModelKind::logreg;
    cfg.train.c = 10.0;
    cfg.train.epochs = 300;
    EvalReport report = cross_validate(separable_dataset(), cfg);
    CHECK(report.mean.accuracy == doctest::Approx(1.0));
    CHECK(report.mean_auc == doctest::Approx(1.0));
    CHECK(report.folds.size() == 5);
    for (const FoldResult& fold : report.folds) {
        CHECK(fold.train_count + fold.test_count == 20);
    }
    CHECK(report.total_count == 20);
    CHECK(report.dark_count == 10);
}

TEST_CASE("cross_validate never counts held-out documents in the vocabulary") {
    // Every document carries a unique marker token (df = 1). If fold
    // vocabularies were built on anything but the train split, a held-out
    // marker would leak in.
    Dataset ds = separable_dataset();
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        ds.samples[i].text += " marker" + std::string(1, static_cast<char>('a' + i));
    }
    CrossValidationConfig cfg;
    cfg.k = 4;
    cfg.train.epochs = 5;
    int observed_folds = 0;
    cfg.fold_observer = [&](std::uint32_t, const Vocabulary& vocabulary,
                            std::span<const std::size_t> heldout) {
        ++observed_folds;
        for (std::size_t index : heldout) {
            std::string marker = "marker" + std::string(1, static_cast<char>('a' + index));
            CHECK(vocabulary.token_to_index.count(marker) == 0);
        }
    };
    cross_validate(ds, cfg);
    CHECK(observed_folds == 4);
}

TEST_CASE("report metrics stay within [0,1] and serialize") {
    CrossValidationConfig cfg;
    cfg.k = 5;
    cfg.train.epochs = 20;
    EvalReport report = cross_validate(separable_dataset(), cfg);
    for (const FoldResult& f : report.folds) {
        for (double v : {f.metrics.accuracy, f.metrics.precision, f.metrics.recall, f.metrics.f1,
                         f.auc}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    std::string json_text = report.to_json();
    CHECK(json_text.find("\"mean\"") != std::string::npos);
    CHECK(json_text.find("\"pooled\"") != std::string::npos);
    std::string table = report.format_table();
    CHECK(table.find("Accuracy") != std::string::npos);
    CHECK(table.find("logreg") != std::string::npos);
}
