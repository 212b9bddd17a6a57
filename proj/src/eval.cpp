#include "darkdetect/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "darkdetect/errors.hpp"
#include "darkdetect/rng.hpp"

namespace darkdetect {

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
    std::vector<std::size_t> sizes(k, 0);
    for (std::uint32_t f : fold_of) ++sizes[f];
    return sizes;
}

FoldAssignment stratified_kfold(std::span<const Label> labels, std::uint32_t k,
                                std::uint64_t seed) {
    if (k < 2) throw DataError("k must be >= 2");

    std::vector<std::size_t> dark_indices, non_dark_indices;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        (labels[i] == Label::dark ? dark_indices : non_dark_indices).push_back(i);
    }
    for (const auto* cls : {&dark_indices, &non_dark_indices}) {
        if (cls->size() < k) {
            throw DataError("class with " + std::to_string(cls->size()) +
                            " samples cannot be split into " + std::to_string(k) + " folds");
        }
    }

    FoldAssignment assignment;
    assignment.k = k;
    assignment.seed = seed;
    assignment.fold_of.assign(labels.size(), 0);

    Rng rng(seed);
    std::uint32_t cursor = 0;
    for (auto* cls : {&dark_indices, &non_dark_indices}) {
        rng.shuffle(*cls);
        for (std::size_t index : *cls) {
            assignment.fold_of[index] = cursor;
            cursor = (cursor + 1) % k;
        }
    }
    return assignment;
}

Metrics compute_metrics(std::span<const double> scores, std::span<const Label> labels,
                        double threshold) {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        bool predicted_dark = scores[i] >= threshold;
        bool is_dark = labels[i] == Label::dark;
        if (predicted_dark && is_dark) ++tp;
        else if (predicted_dark) ++fp;
        else if (is_dark) ++fn;
        else ++tn;
    }
    auto ratio = [](std::size_t num, std::size_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    Metrics m;
    m.accuracy = ratio(tp + tn, tp + fp + fn + tn);
    m.precision = ratio(tp, tp + fp);
    m.recall = ratio(tp, tp + fn);
    m.f1 = (m.precision + m.recall) == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

double compute_auc(std::span<const double> scores, std::span<const Label> labels) {
    std::size_t positives = 0;
    for (Label l : labels) positives += l == Label::dark;
    std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0) {
        throw SingleClassError("AUC needs both classes present");
    }

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average ranks over tied score groups; sum the positives' ranks.
    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
        double average_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) {
            if (labels[order[t]] == Label::dark) positive_rank_sum += average_rank;
        }
        i = j;
    }
    double p = static_cast<double>(positives);
    double n = static_cast<double>(negatives);
    return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

namespace {

Metrics mean_of(const std::vector<FoldResult>& folds) {
    Metrics m;
    for (const FoldResult& f : folds) {
        m.accuracy += f.metrics.accuracy;
        m.precision += f.metrics.precision;
        m.recall += f.metrics.recall;
        m.f1 += f.metrics.f1;
    }
    double k = static_cast<double>(folds.size());
    m.accuracy /= k;
    m.precision /= k;
    m.recall /= k;
    m.f1 /= k;
    return m;
}

nlohmann::json metrics_to_json(const Metrics& m, double auc) {
    return {{"accuracy", m.accuracy}, {"auc", auc},          {"f1", m.f1},
            {"precision", m.precision}, {"recall", m.recall}};
}

}  // namespace

EvalReport cross_validate(const Dataset& dataset, const CrossValidationConfig& config) {
    std::vector<Label> labels;
    labels.reserve(dataset.samples.size());
    for (const TextSample& s : dataset.samples) labels.push_back(s.label);

    FoldAssignment assignment = stratified_kfold(labels, config.k, config.fold_seed);

    EvalReport report;
    report.model_name = std::string(model_kind_name(config.train.kind));
    report.train_config = config.train;
    report.k = config.k;
    report.fold_seed = config.fold_seed;
    report.min_df = config.min_df;
    report.total_count = dataset.samples.size();
    report.dark_count = dataset.dark_count();
    report.non_dark_count = dataset.non_dark_count();

    std::vector<double> pooled_scores;
    std::vector<Label> pooled_labels;

    for (std::uint32_t fold = 0; fold < config.k; ++fold) {
        std::vector<std::string> train_texts;
        std::vector<Label> train_labels;
        std::vector<std::size_t> test_indices;
        for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
            if (assignment.fold_of[i] == fold) {
                test_indices.push_back(i);
            } else {
                train_texts.push_back(dataset.samples[i].text);
                train_labels.push_back(dataset.samples[i].label);
            }
        }

        Vocabulary vocabulary = build_vocabulary(train_texts, config.min_df);
        if (config.fold_observer) config.fold_observer(fold, vocabulary, test_indices);

        std::vector<FeatureVector> train_vectors;
        train_vectors.reserve(train_texts.size());
        for (const std::string& text : train_texts) {
            train_vectors.push_back(vectorize(text, vocabulary));
        }

        LinearModel model =
            config.train.kind == ModelKind::logreg
                ? train_logreg(train_vectors, train_labels, std::move(vocabulary), config.train)
                : train_linear_svm(train_vectors, train_labels, std::move(vocabulary),
                                   config.train);

        std::vector<double> scores;
        std::vector<Label> test_labels;
        scores.reserve(test_indices.size());
        for (std::size_t i : test_indices) {
            scores.push_back(predict_score(model, dataset.samples[i].text));
            test_labels.push_back(dataset.samples[i].label);
        }

        double threshold = config.threshold.value_or(model.default_threshold());
        report.threshold = threshold;

        FoldResult result;
        result.metrics = compute_metrics(scores, test_labels, threshold);
        result.auc = compute_auc(scores, test_labels);
        result.train_count = train_texts.size();
        result.test_count = test_indices.size();
        report.folds.push_back(result);

        pooled_scores.insert(pooled_scores.end(), scores.begin(), scores.end());
        pooled_labels.insert(pooled_labels.end(), test_labels.begin(), test_labels.end());
    }

    report.mean = mean_of(report.folds);
    double auc_sum = 0.0;
    for (const FoldResult& f : report.folds) auc_sum += f.auc;
    report.mean_auc = auc_sum / static_cast<double>(report.folds.size());
    report.pooled = compute_metrics(pooled_scores, pooled_labels, report.threshold);
    report.pooled_auc = compute_auc(pooled_scores, pooled_labels);
    return report;
}

std::string EvalReport::to_json() const {
    nlohmann::json j;
    j["format_version"] = 1;
    j["model"] = model_name;
    if (train_config.kind == ModelKind::linear_svm) j["kernel"] = "linear";
    j["config"] = {
        {"kind", std::string(model_kind_name(train_config.kind))},
        {"c", train_config.c},
        {"epochs", train_config.epochs},
        {"learning_rate", train_config.learning_rate},
        {"lr_decay", train_config.lr_decay},
        {"batch_size", train_config.batch_size},
        {"seed", train_config.seed},
        {"tolerance", train_config.tolerance},
        {"k", k},
        {"fold_seed", fold_seed},
        {"min_df", min_df},
        {"threshold", threshold},
    };
    j["counts"] = {{"total", total_count}, {"dark", dark_count}, {"non_dark", non_dark_count}};
    j["folds"] = nlohmann::json::array();
    for (const FoldResult& f : folds) {
        nlohmann::json jf = metrics_to_json(f.metrics, f.auc);
        jf["train_count"] = f.train_count;
        jf["test_count"] = f.test_count;
        j["folds"].push_back(jf);
    }
    j["mean"] = metrics_to_json(mean, mean_auc);
    j["pooled"] = metrics_to_json(pooled, pooled_auc);
    return j.dump(2);
}

std::string EvalReport::format_table() const {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-22s %-9s %-7s %-8s %-10s %-7s\n", "Model", "Accuracy",
                  "AUC", "F1", "Precision", "Recall");
    out << line;
    std::string name = model_name;
    if (train_config.kind == ModelKind::linear_svm) name += " (linear)";
    std::snprintf(line, sizeof(line), "%-22s %-9.3f %-7.3f %-8.3f %-10.3f %-7.3f\n",
                  name.c_str(), mean.accuracy, mean_auc, mean.f1, mean.precision, mean.recall);
    out << line;
    return out.str();
}

}  // namespace darkdetect
