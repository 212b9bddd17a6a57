#include "darkdetect/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "darkdetect/errors.hpp"
#include "darkdetect/rng.hpp"

namespace darkdetect {

std::string_view model_kind_name(ModelKind kind) {
    return kind == ModelKind::logreg ? "logreg" : "linear_svm";
}

ModelKind model_kind_from_name(std::string_view name) {
    if (name == "logreg") return ModelKind::logreg;
    if (name == "linear_svm" || name == "svm") return ModelKind::linear_svm;
    throw DataError("unknown model kind '" + std::string(name) + "'");
}

double LinearModel::decision_value(const FeatureVector& x) const {
    double f = bias;
    for (std::size_t i = 0; i < x.indices.size(); ++i) {
        f += weights[x.indices[i]] * x.counts[i];
    }
    return f;
}

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(-m)) without overflow for large |m|.
double log1p_exp_neg(double margin) {
    if (margin > 0) return std::log1p(std::exp(-margin));
    return -margin + std::log1p(std::exp(margin));
}

double signed_label(Label label) { return label == Label::dark ? 1.0 : -1.0; }

double dot(std::span<const double> w, const FeatureVector& x, double b) {
    double f = b;
    for (std::size_t i = 0; i < x.indices.size(); ++i) {
        f += w[x.indices[i]] * x.counts[i];
    }
    return f;
}

// Accumulates the (sub)gradient of one sample's loss, scaled by `scale`.
void accumulate_loss_grad(ModelKind kind, const FeatureVector& x, double y, double margin,
                          double scale, std::span<double> grad_w, double& grad_b) {
    double coeff;
    if (kind == ModelKind::logreg) {
        coeff = -y * sigmoid(-margin);  // d/df log(1+exp(-y f)) = -y·sigma(-y f)
    } else {
        if (margin >= 1.0) return;  // outside the hinge
        coeff = -y;
    }
    coeff *= scale;
    for (std::size_t i = 0; i < x.indices.size(); ++i) {
        grad_w[x.indices[i]] += coeff * x.counts[i];
    }
    grad_b += coeff;
}

double sample_loss(ModelKind kind, double margin) {
    if (kind == ModelKind::logreg) return log1p_exp_neg(margin);
    return std::max(0.0, 1.0 - margin);
}

double objective_value(ModelKind kind, std::span<const FeatureVector> x,
                       std::span<const Label> y, std::span<const double> w, double b,
                       double c) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += sample_loss(kind, signed_label(y[i]) * dot(w, x[i], b));
    }
    double n = static_cast<double>(x.size());
    double reg = 0.0;
    for (double wi : w) reg += wi * wi;
    return total / n + reg / (2.0 * c * n);
}

}  // namespace

Objective evaluate_objective(ModelKind kind, std::span<const FeatureVector> x,
                             std::span<const Label> y, std::span<const double> weights,
                             double bias, double c) {
    Objective obj;
    obj.grad_w.assign(weights.size(), 0.0);
    double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double yi = signed_label(y[i]);
        double margin = yi * dot(weights, x[i], bias);
        obj.value += sample_loss(kind, margin);
        accumulate_loss_grad(kind, x[i], yi, margin, 1.0 / n, obj.grad_w, obj.grad_b);
    }
    obj.value /= n;
    double reg = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        reg += weights[j] * weights[j];
        obj.grad_w[j] += weights[j] / (c * n);
    }
    obj.value += reg / (2.0 * c * n);
    return obj;
}

namespace {

LinearModel train_linear(ModelKind kind, const std::vector<FeatureVector>& x,
                         const std::vector<Label>& y, Vocabulary vocabulary,
                         TrainConfig config, std::vector<double>* objective_history) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DataError("training needs at least 2 samples with matching labels");
    }
    bool has_dark = false, has_non_dark = false;
    for (Label label : y) (label == Label::dark ? has_dark : has_non_dark) = true;
    if (!has_dark || !has_non_dark) {
        throw SingleClassError("training input contains only one class");
    }
    if (config.c <= 0) throw DataError("C must be positive");
    if (config.epochs < 1) throw DataError("epochs must be >= 1");
    if (config.tolerance <= 0) throw DataError("tolerance must be positive");

    config.kind = kind;
    const std::size_t n = x.size();
    const std::size_t dim = vocabulary.size();
    const double c = config.c;
    std::vector<double> w(dim, 0.0);
    double b = 0.0;

    std::size_t batch = config.batch_size == 0 ? n : std::min<std::size_t>(config.batch_size, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(config.seed);

    std::vector<double> grad(dim, 0.0);
    double prev_objective = objective_value(kind, x, y, w, b, c);
    if (objective_history) objective_history->push_back(prev_objective);

    for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double step = config.learning_rate / (1.0 + config.lr_decay * epoch);

        for (std::size_t begin = 0; begin < n; begin += batch) {
            std::size_t end = std::min(begin + batch, n);
            double inv = 1.0 / static_cast<double>(end - begin);

            std::fill(grad.begin(), grad.end(), 0.0);
            double grad_b = 0.0;
            for (std::size_t k = begin; k < end; ++k) {
                const FeatureVector& xi = x[order[k]];
                double yi = signed_label(y[order[k]]);
                double margin = yi * dot(w, xi, b);
                accumulate_loss_grad(kind, xi, yi, margin, inv, grad, grad_b);
            }
            double reg_coeff = 1.0 / (c * static_cast<double>(n));
            for (std::size_t j = 0; j < dim; ++j) {
                w[j] -= step * (grad[j] + reg_coeff * w[j]);
            }
            b -= step * grad_b;
        }

        double objective = objective_value(kind, x, y, w, b, c);
        if (objective_history) objective_history->push_back(objective);
        if (!std::isfinite(objective)) throw DivergenceError(epoch);
        double relative_change = std::abs(prev_objective - objective) /
                                 std::max(std::abs(prev_objective), 1e-12);
        prev_objective = objective;
        if (relative_change < config.tolerance) break;
    }

    for (double wi : w) {
        if (!std::isfinite(wi)) throw DivergenceError(config.epochs);
    }
    if (!std::isfinite(b)) throw DivergenceError(config.epochs);

    LinearModel model;
    model.kind = kind;
    model.weights = std::move(w);
    model.bias = b;
    model.vocabulary = std::move(vocabulary);
    model.config = config;
    return model;
}

}  // namespace

LinearModel train_logreg(const std::vector<FeatureVector>& x, const std::vector<Label>& y,
                         Vocabulary vocabulary, TrainConfig config,
                         std::vector<double>* objective_history) {
    return train_linear(ModelKind::logreg, x, y, std::move(vocabulary), config,
                        objective_history);
}

LinearModel train_linear_svm(const std::vector<FeatureVector>& x, const std::vector<Label>& y,
                             Vocabulary vocabulary, TrainConfig config,
                             std::vector<double>* objective_history) {
    return train_linear(ModelKind::linear_svm, x, y, std::move(vocabulary), config,
                        objective_history);
}

double predict_score(const LinearModel& model, std::string_view input) {
    FeatureVector x = vectorize(input, model.vocabulary);
    double f = model.decision_value(x);
    return model.kind == ModelKind::logreg ? sigmoid(f) : f;
}

Label predict_label(const LinearModel& model, std::string_view input,
                    std::optional<double> threshold) {
    double cut = threshold.value_or(model.default_threshold());
    return predict_score(model, input) >= cut ? Label::dark : Label::non_dark;
}

namespace {

nlohmann::json config_to_json(const TrainConfig& config) {
    return {
        {"kind", std::string(model_kind_name(config.kind))},
        {"c", config.c},
        {"epochs", config.epochs},
        {"learning_rate", config.learning_rate},
        {"lr_decay", config.lr_decay},
        {"batch_size", config.batch_size},
        {"seed", config.seed},
        {"tolerance", config.tolerance},
    };
}

TrainConfig config_from_json(const nlohmann::json& j) {
    TrainConfig config;
    config.kind = model_kind_from_name(j.at("kind").get<std::string>());
    config.c = j.at("c").get<double>();
    config.epochs = j.at("epochs").get<std::uint32_t>();
    config.learning_rate = j.at("learning_rate").get<double>();
    config.lr_decay = j.at("lr_decay").get<double>();
    config.batch_size = j.at("batch_size").get<std::uint32_t>();
    config.seed = j.at("seed").get<std::uint64_t>();
    config.tolerance = j.at("tolerance").get<double>();
    return config;
}

constexpr int kModelFormatVersion = 1;

}  // namespace

std::string model_to_json(const LinearModel& model) {
    nlohmann::json j;
    j["format_version"] = kModelFormatVersion;
    j["kind"] = std::string(model_kind_name(model.kind));
    j["config"] = config_to_json(model.config);
    j["vocabulary"] = {
        {"tokens", model.vocabulary.index_to_token},
        {"document_frequency", model.vocabulary.document_frequency},
        {"min_df", model.vocabulary.min_df},
        {"config_hash", model.vocabulary.config_hash},
    };
    j["weights"] = model.weights;
    j["bias"] = model.bias;
    return j.dump();
}

LinearModel model_from_json(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.at("format_version").get<int>() != kModelFormatVersion) {
        throw DataError("unsupported model format_version");
    }
    LinearModel model;
    model.kind = model_kind_from_name(j.at("kind").get<std::string>());
    model.config = config_from_json(j.at("config"));
    const nlohmann::json& v = j.at("vocabulary");
    model.vocabulary.index_to_token = v.at("tokens").get<std::vector<std::string>>();
    model.vocabulary.document_frequency =
        v.at("document_frequency").get<std::vector<std::uint32_t>>();
    model.vocabulary.min_df = v.at("min_df").get<std::uint32_t>();
    model.vocabulary.config_hash = v.at("config_hash").get<std::uint64_t>();
    for (std::uint32_t i = 0; i < model.vocabulary.index_to_token.size(); ++i) {
        model.vocabulary.token_to_index.emplace(model.vocabulary.index_to_token[i], i);
    }
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    if (model.weights.size() != model.vocabulary.index_to_token.size()) {
        throw DataError("model weight count does not match vocabulary size");
    }
    for (double w : model.weights) {
        if (!std::isfinite(w)) throw DataError("model contains non-finite weights");
    }
    if (!std::isfinite(model.bias)) throw DataError("model contains non-finite bias");
    return model;
}

void save_model(const LinearModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write model file: " + path.string());
    out << model_to_json(model) << '\n';
}

LinearModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file: " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(content);
}

}  // namespace darkdetect
