#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darkdetect/dataset.hpp"
#include "darkdetect/linear_model.hpp"

namespace darkdetect {

/// Stratified fold assignment: folds are disjoint, cover every sample, and
/// per-class counts across folds differ by at most one.
struct FoldAssignment {
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> fold_of;  // per sample, in 0..k-1

    std::vector<std::size_t> fold_sizes() const;
};

/// Seeded shuffle within each class followed by round-robin assignment (the
/// fold cursor carries across classes, so overall fold sizes also differ by
/// at most one). Throws DataError when k < 2 or any class has fewer than k
/// samples.
FoldAssignment stratified_kfold(std::span<const Label> labels, std::uint32_t k,
                                std::uint64_t seed);

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Standard binary metrics with dark as the positive class; predicted
/// positive iff score >= threshold. Degenerate denominators yield 0, so f1
/// is 0 whenever precision + recall is 0.
Metrics compute_metrics(std::span<const double> scores, std::span<const Label> labels,
                        double threshold);

/// Probability that a uniformly random positive outranks a uniformly random
/// negative, ties counted one half (rank-based Mann-Whitney). Throws
/// SingleClassError unless both classes are present.
double compute_auc(std::span<const double> scores, std::span<const Label> labels);

struct FoldResult {
    Metrics metrics;
    double auc = 0.0;
    std::size_t train_count = 0;
    std::size_t test_count = 0;
};

struct CrossValidationConfig {
    TrainConfig train;
    std::uint32_t k = 5;
    std::uint64_t fold_seed = 42;
    std::uint32_t min_df = 1;
    std::optional<double> threshold;  // default: model kind's threshold

    /// Called after each fold's vocabulary is built, before training; used
    /// by the leakage checks. Receives the held-out sample indices.
    std::function<void(std::uint32_t fold, const Vocabulary& vocabulary,
                       std::span<const std::size_t> heldout_indices)>
        fold_observer;
};

struct EvalReport {
    std::string model_name;
    std::vector<FoldResult> folds;
    Metrics mean;
    double mean_auc = 0.0;
    Metrics pooled;  // metrics over all held-out predictions pooled together
    double pooled_auc = 0.0;
    std::size_t total_count = 0;
    std::size_t dark_count = 0;
    std::size_t non_dark_count = 0;
    // Config echo.
    TrainConfig train_config;
    std::uint32_t k = 0;
    std::uint64_t fold_seed = 0;
    std::uint32_t min_df = 1;
    double threshold = 0.0;

    std::string to_json() const;
    /// Table row in Model / Accuracy / AUC / F1 / Precision / Recall order.
    std::string format_table() const;
};

/// For each fold: builds the vocabulary on the training split only, trains
/// the configured model, scores the held-out split, and computes metrics.
/// Reports per-fold values with their mean (headline) and pooled variants.
EvalReport cross_validate(const Dataset& dataset, const CrossValidationConfig& config);

}  // namespace darkdetect
