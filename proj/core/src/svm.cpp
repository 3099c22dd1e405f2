#include "smkt/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "smkt/errors.hpp"
#include "smkt/io.hpp"
#include "smkt/rng.hpp"

namespace smkt::svm {
namespace {

void validate_config(const SvmConfig& config) {
    if (!(config.C > 0.0) || !(config.gamma > 0.0) || !(config.tol > 0.0) ||
        config.max_passes <= 0) {
        throw Error(errc::invalid_argument, "C, gamma, tol and max_passes must be positive");
    }
}

void validate_training_data(const std::vector<std::vector<double>>& features,
                            const std::vector<int>& labels) {
    if (features.size() != labels.size()) {
        throw Error(errc::dimension_mismatch, "feature row count != label count");
    }
    if (features.empty()) throw Error(errc::too_few_rows, "no training rows");
    const std::size_t dim = features.front().size();
    bool saw_up = false;
    bool saw_down = false;
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (features[i].size() != dim) {
            throw Error(errc::dimension_mismatch,
                        "row " + std::to_string(i) + " has inconsistent width");
        }
        for (double v : features[i]) {
            if (!std::isfinite(v)) {
                throw Error(errc::non_finite_feature,
                            "row " + std::to_string(i) + " holds a non-finite value");
            }
        }
        if (labels[i] == +1) {
            saw_up = true;
        } else if (labels[i] == -1) {
            saw_down = true;
        } else {
            throw Error(errc::invalid_argument,
                        "labels must be +1 or -1, got " + std::to_string(labels[i]));
        }
    }
    if (!saw_up || !saw_down) {
        throw Error(errc::single_class, "training labels hold only one class");
    }
}

}  // namespace

double rbf_kernel(std::span<const double> u, std::span<const double> v, double gamma) {
    if (u.size() != v.size()) {
        throw Error(errc::dimension_mismatch,
                    std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        sq += d * d;
    }
    return std::exp(-gamma * sq);
}

TrainedModel train(const std::vector<std::vector<double>>& features,
                   const std::vector<int>& labels, const SvmConfig& config) {
    validate_config(config);
    validate_training_data(features, labels);

    const std::size_t n = features.size();
    const double C = config.C;

    // The whole kernel matrix fits comfortably at the row counts this
    // toolkit works with (hundreds).
    std::vector<std::vector<double>> K(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            K[i][j] = K[j][i] = rbf_kernel(features[i], features[j], config.gamma);
        }
    }

    std::vector<double> alpha(n, 0.0);
    double b = 0.0;
    Rng rng(config.seed);

    const auto decision = [&](std::size_t i) {
        double f = b;
        for (std::size_t j = 0; j < n; ++j) {
            if (alpha[j] != 0.0) f += alpha[j] * labels[j] * K[j][i];
        }
        return f;
    };

    int passes = 0;
    while (passes < config.max_passes) {
        std::size_t num_changed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e_i = decision(i) - labels[i];
            const double r_i = e_i * labels[i];
            if (!((r_i < -config.tol && alpha[i] < C) || (r_i > config.tol && alpha[i] > 0.0)))
                continue;

            std::size_t j = rng.next_below(n - 1);
            if (j >= i) ++j;
            const double e_j = decision(j) - labels[j];

            const double alpha_i_old = alpha[i];
            const double alpha_j_old = alpha[j];
            double lo = 0.0;
            double hi = 0.0;
            if (labels[i] != labels[j]) {
                lo = std::max(0.0, alpha_j_old - alpha_i_old);
                hi = std::min(C, C + alpha_j_old - alpha_i_old);
            } else {
                lo = std::max(0.0, alpha_i_old + alpha_j_old - C);
                hi = std::min(C, alpha_i_old + alpha_j_old);
            }
            if (lo >= hi) continue;

            const double eta = 2.0 * K[i][j] - K[i][i] - K[j][j];
            if (eta >= 0.0) continue;

            double alpha_j_new = alpha_j_old - labels[j] * (e_i - e_j) / eta;
            alpha_j_new = std::clamp(alpha_j_new, lo, hi);
            if (std::fabs(alpha_j_new - alpha_j_old) < 1e-5) continue;

            const double alpha_i_new =
                alpha_i_old + labels[i] * labels[j] * (alpha_j_old - alpha_j_new);
            alpha[i] = alpha_i_new;
            alpha[j] = alpha_j_new;

            const double b1 = b - e_i - labels[i] * (alpha_i_new - alpha_i_old) * K[i][i] -
                              labels[j] * (alpha_j_new - alpha_j_old) * K[i][j];
            const double b2 = b - e_j - labels[i] * (alpha_i_new - alpha_i_old) * K[i][j] -
                              labels[j] * (alpha_j_new - alpha_j_old) * K[j][j];
            if (alpha_i_new > 0.0 && alpha_i_new < C) {
                b = b1;
            } else if (alpha_j_new > 0.0 && alpha_j_new < C) {
                b = b2;
            } else {
                b = 0.5 * (b1 + b2);
            }
            ++num_changed;
        }
        passes = num_changed == 0 ? passes + 1 : 0;
    }

    TrainedModel model;
    model.config = config;
    model.bias = b;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0) {
            model.support_vectors.push_back(features[i]);
            model.dual_coef.push_back(alpha[i] * labels[i]);
        }
    }
    return model;
}

double decision_value(const TrainedModel& model, std::span<const double> row) {
    double f = model.bias;
    for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
        f += model.dual_coef[i] * rbf_kernel(model.support_vectors[i], row, model.config.gamma);
    }
    return f;
}

int predict(const TrainedModel& model, std::span<const double> row) {
    return decision_value(model, row) > 0.0 ? +1 : -1;
}

EvalReport evaluate(const TrainedModel& model,
                    const std::vector<std::vector<double>>& features,
                    const std::vector<int>& labels) {
    if (features.size() != labels.size()) {
        throw Error(errc::dimension_mismatch, "feature row count != label count");
    }
    if (features.empty()) throw Error(errc::too_few_rows, "no evaluation rows");

    EvalReport report;
    report.n_test = features.size();
    for (std::size_t i = 0; i < features.size(); ++i) {
        const int pred = predict(model, features[i]);
        if (labels[i] == +1) {
            pred == +1 ? ++report.tp : ++report.fn;
        } else if (labels[i] == -1) {
            pred == -1 ? ++report.tn : ++report.fp;
        } else {
            throw Error(errc::invalid_argument, "labels must be +1 or -1");
        }
    }
    report.accuracy =
        static_cast<double>(report.tp + report.tn) / static_cast<double>(report.n_test);

    const auto f1 = [](std::size_t tp, std::size_t fp, std::size_t fn) {
        if (tp + fp == 0 || tp + fn == 0) return 0.0;
        const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
        if (precision + recall == 0.0) return 0.0;
        return 2.0 * precision * recall / (precision + recall);
    };
    report.f1_up = f1(report.tp, report.fp, report.fn);
    report.f1_down = f1(report.tn, report.fn, report.fp);
    return report;
}

SvmConfig grid_search(const std::vector<std::vector<double>>& features,
                      const std::vector<int>& labels, const std::vector<double>& c_grid,
                      const std::vector<double>& gamma_grid, std::size_t folds,
                      std::uint64_t seed, double tol, int max_passes) {
    if (c_grid.empty() || gamma_grid.empty()) {
        throw Error(errc::empty_grid, "both C and gamma grids need at least one value");
    }
    if (folds < 2) throw Error(errc::invalid_argument, "grid search needs >= 2 folds");
    const std::size_t n = features.size();
    if (n < folds) {
        throw Error(errc::too_few_rows, std::to_string(n) + " rows cannot fill " +
                                            std::to_string(folds) + " folds");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(order);
    std::vector<std::size_t> fold_of(n);
    for (std::size_t k = 0; k < n; ++k) fold_of[order[k]] = k % folds;

    double best_accuracy = -1.0;
    SvmConfig best;
    best.tol = tol;
    best.max_passes = max_passes;
    best.seed = seed;

    for (const double c_value : c_grid) {
        for (const double gamma : gamma_grid) {
            SvmConfig config;
            config.C = c_value;
            config.gamma = gamma;
            config.tol = tol;
            config.max_passes = max_passes;
            config.seed = seed;
            validate_config(config);

            std::size_t correct = 0;
            for (std::size_t f = 0; f < folds; ++f) {
                std::vector<std::vector<double>> train_x;
                std::vector<int> train_y;
                for (std::size_t i = 0; i < n; ++i) {
                    if (fold_of[i] != f) {
                        train_x.push_back(features[i]);
                        train_y.push_back(labels[i]);
                    }
                }
                const TrainedModel model = train(train_x, train_y, config);
                for (std::size_t i = 0; i < n; ++i) {
                    if (fold_of[i] == f && predict(model, features[i]) == labels[i]) {
                        ++correct;
                    }
                }
            }
            const double accuracy = static_cast<double>(correct) / static_cast<double>(n);
            // Accuracies share the denominator n, so exact comparison is
            // sound; ties prefer smaller C, then smaller gamma.
            const bool better =
                accuracy > best_accuracy ||
                (accuracy == best_accuracy &&
                 (c_value < best.C || (c_value == best.C && gamma < best.gamma)));
            if (best_accuracy < 0.0 || better) {
                best_accuracy = accuracy;
                best.C = c_value;
                best.gamma = gamma;
            }
        }
    }
    return best;
}

void save_model(const TrainedModel& model, const std::string& path) {
    nlohmann::json j;
    j["kind"] = "svm-model";
    j["config"] = {{"C", model.config.C},
                   {"gamma", model.config.gamma},
                   {"tol", model.config.tol},
                   {"max_passes", model.config.max_passes},
                   {"seed", model.config.seed}};
    j["feature_names"] = model.feature_names;
    j["normalization"] = {{"scope", model.norm_scope.empty() ? "none" : model.norm_scope},
                          {"mean", model.norm_stats.mean},
                          {"sd", model.norm_stats.sd}};
    j["support_vectors"] = model.support_vectors;
    j["dual_coefficients"] = model.dual_coef;
    j["bias"] = model.bias;
    io::atomic_write(path, j.dump(2) + "\n");
}

TrainedModel load_model(const std::string& path) {
    const nlohmann::json j = nlohmann::json::parse(io::read_file(path));
    TrainedModel model;
    const auto& config = j.at("config");
    model.config.C = config.at("C").get<double>();
    model.config.gamma = config.at("gamma").get<double>();
    model.config.tol = config.at("tol").get<double>();
    model.config.max_passes = config.at("max_passes").get<int>();
    model.config.seed = config.at("seed").get<std::uint64_t>();
    model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    const auto& norm = j.at("normalization");
    const auto scope = norm.at("scope").get<std::string>();
    model.norm_scope = scope == "none" ? "" : scope;
    model.norm_stats.mean = norm.at("mean").get<std::vector<double>>();
    model.norm_stats.sd = norm.at("sd").get<std::vector<double>>();
    model.support_vectors = j.at("support_vectors").get<std::vector<std::vector<double>>>();
    model.dual_coef = j.at("dual_coefficients").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();

    if (model.support_vectors.size() != model.dual_coef.size()) {
        throw Error(errc::dimension_mismatch,
                    path + ": support vector and coefficient counts differ");
    }
    for (const auto& sv : model.support_vectors) {
        if (sv.size() != model.support_vectors.front().size()) {
            throw Error(errc::dimension_mismatch, path + ": ragged support vectors");
        }
    }
    return model;
}

}  // namespace smkt::svm
