#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote {

struct Split {
    std::vector<std::size_t> train;  // ascending row indices
    std::vector<std::size_t> test;
};

/// Per-class shuffled split. Each class contributes round(n_c * test_fraction)
/// rows to the test side, clamped to [1, n_c - 1]. Throws StratificationError
/// if any class has fewer than two rows.
Split stratified_split(std::span<const ClassId> labels, double test_fraction, std::uint64_t seed);

Dataset select_rows(const Dataset& ds, std::span<const std::size_t> rows);

enum class Method { None, AxelSmote, Smote };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct EvaluationConfig {
    Method method = Method::AxelSmote;
    AxelParams params;               // strategy also used by SMOTE
    std::size_t smote_k = 5;
    std::size_t classifier_k = 3;
    double test_fraction = 0.2;
    std::size_t runs = 10;
    std::uint64_t seed = 0;          // run r uses seed + r
    ExecutionOptions exec;
};

struct RunMetrics {
    std::uint64_t seed = 0;
    double f1_macro = 0.0;
    double balanced_accuracy = 0.0;
    std::size_t train_rows = 0;      // after resampling
    std::size_t test_rows = 0;
};

struct EvaluationResult {
    std::vector<RunMetrics> runs;    // ordered by run index
    double f1_mean = 0.0;
    double balanced_accuracy_mean = 0.0;
    std::optional<double> f1_std;    // sample std, absent for a single run
    std::optional<double> balanced_accuracy_std;
    std::vector<std::string> warnings;
};

/// Split, fit min-max scaling on the training fold, resample the training
/// fold only, classify the test fold with k-NN. Input must be validated but
/// need not be normalized.
EvaluationResult evaluate(const Dataset& ds, const EvaluationConfig& config);

}  // namespace axelsmote
