#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smkt/dataset.hpp"

namespace smkt::svm {

struct SvmConfig {
    double C = 1.0;       // soft-margin penalty
    double gamma = 0.1;   // RBF width
    double tol = 1e-3;    // KKT tolerance
    int max_passes = 10;  // consecutive clean sweeps before stopping
    std::uint64_t seed = 0;
};

/// Default grid-search ranges (log-spaced).
inline const std::vector<double> kDefaultCGrid = {0.1, 1.0, 10.0, 100.0};
inline const std::vector<double> kDefaultGammaGrid = {0.001, 0.01, 0.1, 1.0};

/// exp(-gamma * ||u - v||^2); in (0, 1] for finite inputs.
double rbf_kernel(std::span<const double> u, std::span<const double> v, double gamma);

/// Support vectors with their signed dual weights alpha_i * y_i.
/// Invariants after train(): |dual_coef_i| <= C, |sum dual_coef_i| <= tol.
struct TrainedModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> dual_coef;
    double bias = 0.0;
    SvmConfig config;

    // Carried along so a persisted model can validate and reproduce the
    // preprocessing of the dataset it was fit on.
    std::vector<std::string> feature_names;
    dataset::NormStats norm_stats;
    std::string norm_scope;
};

/// Simplified sequential minimal optimization (pairwise coordinate ascent
/// with a seeded random second index). Deterministic given (data, config).
TrainedModel train(const std::vector<std::vector<double>>& features,
                   const std::vector<int>& labels, const SvmConfig& config);

double decision_value(const TrainedModel& model, std::span<const double> row);

/// sign(decision_value); an exact 0 maps to -1.
int predict(const TrainedModel& model, std::span<const double> row);

struct EvalReport {
    double accuracy = 0.0;
    double f1_up = 0.0;
    double f1_down = 0.0;
    std::size_t tp = 0;  // label +1 predicted +1
    std::size_t fp = 0;  // label -1 predicted +1
    std::size_t tn = 0;  // label -1 predicted -1
    std::size_t fn = 0;  // label +1 predicted -1
    std::size_t n_test = 0;
};

/// Accuracy plus one-vs-rest F1 for each class; zero-denominator precision
/// or recall yields F1 = 0.
EvalReport evaluate(const TrainedModel& model,
                    const std::vector<std::vector<double>>& features,
                    const std::vector<int>& labels);

/// k-fold cross-validated accuracy over the C x gamma grid; returns the
/// best cell, ties broken by smaller C then smaller gamma.
SvmConfig grid_search(const std::vector<std::vector<double>>& features,
                      const std::vector<int>& labels, const std::vector<double>& c_grid,
                      const std::vector<double>& gamma_grid, std::size_t folds,
                      std::uint64_t seed, double tol = 1e-3, int max_passes = 10);

/// JSON persistence (config, normalization stats, support vectors, dual
/// coefficients, bias, feature names).
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace smkt::svm
