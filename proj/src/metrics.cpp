#include "axelsmote/metrics.hpp"

#include <algorithm>
#include <utility>

#include "axelsmote/knn.hpp"

namespace axelsmote {

namespace {

void check_lengths(std::span<const ClassId> truth, std::span<const ClassId> predicted) {
    if (truth.size() != predicted.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(truth.size()) + " true labels vs " +
                                                   std::to_string(predicted.size()) + " predictions");
    }
}

}  // namespace

double imbalance_ratio(std::span<const ClassId> labels) {
    const auto counts = class_counts(labels);
    if (counts.empty()) throw Error(ErrorCode::EmptyDataset, "imbalance ratio of an empty label set");
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    return static_cast<double>(hi->second) / static_cast<double>(lo->second);
}

double imbalance_ratio(const Dataset& ds) { return imbalance_ratio(ds.labels); }

std::set<ClassId> minority_classes(std::span<const ClassId> labels, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
    const auto counts = class_counts(labels);
    std::size_t majority = 0;
    for (const auto& [c, n] : counts) majority = std::max(majority, n);
    std::set<ClassId> out;
    for (const auto& [c, n] : counts) {
        if (static_cast<double>(n) < gamma * static_cast<double>(majority)) out.insert(c);
    }
    return out;
}

std::set<ClassId> minority_classes(const Dataset& ds, double gamma) {
    return minority_classes(ds.labels, gamma);
}

ConfusionCounts ConfusionCounts::from(std::span<const ClassId> truth,
                                      std::span<const ClassId> predicted) {
    check_lengths(truth, predicted);
    ConfusionCounts cc;
    cc.total = truth.size();
    for (ClassId c : truth) cc.per_class[c];
    for (ClassId c : predicted) cc.per_class[c];
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == predicted[i]) {
            ++cc.per_class[truth[i]].tp;
        } else {
            ++cc.per_class[truth[i]].fn;
            ++cc.per_class[predicted[i]].fp;
        }
    }
    for (auto& [c, k] : cc.per_class) k.tn = cc.total - k.tp - k.fp - k.fn;
    return cc;
}

MetricValue f1_score(std::span<const ClassId> truth, std::span<const ClassId> predicted,
                     Averaging averaging, ClassId positive) {
    const auto cc = ConfusionCounts::from(truth, predicted);
    MetricValue out;
    auto per_class_f1 = [&](ClassId c, const ClassConfusion& k) {
        const std::size_t denom = 2 * k.tp + k.fp + k.fn;
        if (denom == 0) {
            out.warnings.push_back("F1 undefined for class " + std::to_string(c) + "; scored as 0");
            return 0.0;
        }
        return 2.0 * static_cast<double>(k.tp) / static_cast<double>(denom);
    };

    if (averaging == Averaging::BinaryPositive) {
        auto it = cc.per_class.find(positive);
        out.value = per_class_f1(positive, it == cc.per_class.end() ? ClassConfusion{} : it->second);
        return out;
    }
    if (cc.per_class.empty()) {
        out.warnings.emplace_back("no labels; macro F1 scored as 0");
        return out;
    }
    double sum = 0.0;
    for (const auto& [c, k] : cc.per_class) sum += per_class_f1(c, k);
    out.value = sum / static_cast<double>(cc.per_class.size());
    return out;
}

MetricValue balanced_accuracy(std::span<const ClassId> truth, std::span<const ClassId> predicted) {
    const auto cc = ConfusionCounts::from(truth, predicted);
    MetricValue out;
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto& [c, k] : cc.per_class) {
        const std::size_t support = k.tp + k.fn;
        if (support == 0) {
            out.warnings.push_back("class " + std::to_string(c) +
                                   " never occurs in the true labels; excluded from balanced accuracy");
            continue;
        }
        sum += static_cast<double>(k.tp) / static_cast<double>(support);
        ++used;
    }
    if (used == 0) {
        out.warnings.emplace_back("no labels; balanced accuracy scored as 0");
        return out;
    }
    out.value = sum / static_cast<double>(used);
    return out;
}

std::vector<ClassId> knn_classify(const Dataset& train, const Matrix& test, std::size_t k) {
    if (train.rows() == 0) throw Error(ErrorCode::EmptyTrainingSet, "no training rows");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (test.rows() > 0 && test.cols() != train.dims()) {
        throw Error(ErrorCode::DimensionMismatch, "test matrix has " + std::to_string(test.cols()) +
                                                      " columns, training data " +
                                                      std::to_string(train.dims()));
    }
    const std::size_t n = train.rows();
    const std::size_t take = std::min(k, n);

    std::vector<ClassId> predictions(test.rows());
    std::vector<std::pair<double, std::size_t>> scored(n);
    std::map<ClassId, std::size_t> votes;
    for (std::size_t t = 0; t < test.rows(); ++t) {
        const auto query = test.row(t);
        for (std::size_t i = 0; i < n; ++i) {
            scored[i] = {euclidean_distance(query, train.features.row(i)), i};
        }
        std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                          scored.end());
        votes.clear();
        for (std::size_t i = 0; i < take; ++i) ++votes[train.labels[scored[i].second]];
        ClassId best = votes.begin()->first;
        std::size_t best_votes = 0;
        for (const auto& [c, v] : votes) {
            if (v > best_votes) {  // strict: earlier (smaller) ids win ties
                best = c;
                best_votes = v;
            }
        }
        predictions[t] = best;
    }
    return predictions;
}

}  // namespace axelsmote
