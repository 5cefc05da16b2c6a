#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote {

/// max class count / min class count. Throws EmptyDataset on no labels.
double imbalance_ratio(std::span<const ClassId> labels);
double imbalance_ratio(const Dataset& ds);

/// Classes with |S_c| < gamma * majority count. gamma must lie in (0, 1).
std::set<ClassId> minority_classes(std::span<const ClassId> labels, double gamma);
std::set<ClassId> minority_classes(const Dataset& ds, double gamma);

struct ClassConfusion {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;
};

/// One-vs-rest counts for every class seen in either label vector.
struct ConfusionCounts {
    std::map<ClassId, ClassConfusion> per_class;
    std::size_t total = 0;

    static ConfusionCounts from(std::span<const ClassId> truth, std::span<const ClassId> predicted);
};

enum class Averaging { BinaryPositive, Macro };

/// Metric value plus any conventions that were applied (zero-division,
/// excluded classes).
struct MetricValue {
    double value = 0.0;
    std::vector<std::string> warnings;
};

/// F1 = 2TP / (2TP + FP + FN). Macro averages over every class seen in
/// either vector; a class with an empty denominator scores 0.
MetricValue f1_score(std::span<const ClassId> truth, std::span<const ClassId> predicted,
                     Averaging averaging = Averaging::Macro, ClassId positive = 1);

/// Mean per-class recall over classes present in `truth` (equals
/// (TPR + TNR) / 2 for two classes). Predicted-only classes are excluded
/// with a warning.
MetricValue balanced_accuracy(std::span<const ClassId> truth, std::span<const ClassId> predicted);

/// Majority vote of the k nearest training rows (Euclidean, distance ties by
/// row index). Vote ties go to the smallest class id. k is clamped to n.
std::vector<ClassId> knn_classify(const Dataset& train, const Matrix& test, std::size_t k);

}  // namespace axelsmote
