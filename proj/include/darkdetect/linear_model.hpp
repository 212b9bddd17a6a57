#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "darkdetect/dataset.hpp"
#include "darkdetect/features.hpp"

namespace darkdetect {

enum class ModelKind { logreg, linear_svm };

std::string_view model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(std::string_view name);

struct TrainConfig {
    ModelKind kind = ModelKind::logreg;
    double c = 1.0;              // inverse regularization strength, > 0
    std::uint32_t epochs = 200;  // >= 1
    double learning_rate = 0.5;  // initial step size
    double lr_decay = 0.02;      // step at epoch e is learning_rate / (1 + lr_decay * e)
    std::uint32_t batch_size = 32;  // 0 = full batch
    std::uint64_t seed = 42;
    double tolerance = 1e-6;  // relative objective change, > 0
};

/// Trained linear classifier over bag-of-words vectors.
struct LinearModel {
    ModelKind kind = ModelKind::logreg;
    std::vector<double> weights;  // length = vocabulary size, all finite
    double bias = 0.0;
    Vocabulary vocabulary;
    TrainConfig config;

    double decision_value(const FeatureVector& x) const;
    double default_threshold() const { return kind == ModelKind::logreg ? 0.5 : 0.0; }
};

/// Loss value and gradient of the regularized objective
///   (1/n)·sum(loss_i) + (1/(2·c·n))·||w||^2
/// where loss is log(1+exp(-y·f)) for logistic regression and the hinge
/// max(0, 1-y·f) for the linear SVM, with y in {-1,+1} and f = w·x + b.
/// Exposed so gradients can be checked independently of training.
struct Objective {
    double value = 0.0;
    std::vector<double> grad_w;
    double grad_b = 0.0;
};

Objective evaluate_objective(ModelKind kind, std::span<const FeatureVector> x,
                             std::span<const Label> y, std::span<const double> weights,
                             double bias, double c);

/// Deterministic seeded mini-batch (sub)gradient descent on the objective
/// above, until the relative objective change drops below the tolerance or
/// the epoch cap is reached. Throws SingleClassError when only one label is
/// present and DivergenceError when the objective turns non-finite. When
/// `objective_history` is given, the per-epoch objective is appended to it.
LinearModel train_logreg(const std::vector<FeatureVector>& x, const std::vector<Label>& y,
                         Vocabulary vocabulary, TrainConfig config,
                         std::vector<double>* objective_history = nullptr);
LinearModel train_linear_svm(const std::vector<FeatureVector>& x, const std::vector<Label>& y,
                             Vocabulary vocabulary, TrainConfig config,
                             std::vector<double>* objective_history = nullptr);

/// Vectorizes with the embedded vocabulary and scores: sigmoid(w·x+b) for
/// logistic regression, raw w·x+b for the SVM. All-out-of-vocabulary text
/// scores at the bias.
double predict_score(const LinearModel& model, std::string_view input);

/// dark iff score >= threshold; the default threshold is 0.5 for logistic
/// regression and 0.0 for the SVM.
Label predict_label(const LinearModel& model, std::string_view input,
                    std::optional<double> threshold = std::nullopt);

/// Versioned JSON model file: {format_version, kind, config, vocabulary,
/// weights, bias}. Weights round-trip exactly.
void save_model(const LinearModel& model, const std::filesystem::path& path);
std::string model_to_json(const LinearModel& model);
LinearModel load_model(const std::filesystem::path& path);
LinearModel model_from_json(std::string_view json_text);

}  // namespace darkdetect
