#include "axelsmote/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "axelsmote/axelsmote.hpp"
#include "axelsmote/baseline.hpp"
#include "axelsmote/io.hpp"
#include "axelsmote/metrics.hpp"
#include "axelsmote/rng.hpp"
#include "parallel.hpp"

namespace axelsmote {

Split stratified_split(std::span<const ClassId> labels, double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "test fraction must lie in (0, 1)");
    }
    std::map<ClassId, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

    Split split;
    for (auto& [c, rows] : by_class) {
        if (rows.size() < 2) {
            throw Error(ErrorCode::StratificationError,
                        "class " + std::to_string(c) + " has " + std::to_string(rows.size()) +
                            " row(s); stratification needs at least 2");
        }
        auto rng = derive_stream(seed, stream_tag::kSplit, c, 0);
        const auto order = rng.sample_without_replacement(rows.size(), rows.size());
        const auto wanted = static_cast<std::size_t>(std::llround(static_cast<double>(rows.size()) * test_fraction));
        const std::size_t n_test = std::clamp<std::size_t>(wanted, 1, rows.size() - 1);
        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < n_test ? split.test : split.train).push_back(rows[order[i]]);
        }
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

Dataset select_rows(const Dataset& ds, std::span<const std::size_t> rows) {
    Dataset out;
    out.feature_names = ds.feature_names;
    out.normalized = ds.normalized;
    out.features = Matrix(0, ds.dims());
    out.features.data().reserve(rows.size() * ds.dims());
    for (std::size_t r : rows) {
        out.features.append_row(ds.features.row(r));
        out.labels.push_back(ds.labels[r]);
    }
    return out;
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::None: return "none";
        case Method::AxelSmote: return "axelsmote";
        case Method::Smote: return "smote";
    }
    return "none";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "none") return Method::None;
    if (name == "axelsmote") return Method::AxelSmote;
    if (name == "smote") return Method::Smote;
    return std::nullopt;
}

namespace {

struct MeanStd {
    double mean = 0.0;
    std::optional<double> std;
};

MeanStd summarize(const std::vector<double>& xs) {
    MeanStd out;
    if (xs.empty()) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

}  // namespace

EvaluationResult evaluate(const Dataset& ds, const EvaluationConfig& config) {
    validate_dataset(ds);
    if (config.runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be at least 1");
    if (config.method == Method::AxelSmote) {
        config.params.validate();
        partition_traits(ds.dims(), config.params.traits);
    }

    EvaluationResult result;
    result.runs.resize(config.runs);
    std::vector<std::vector<std::string>> run_warnings(config.runs);

    // Runs are independent; resampling inside each run stays single-threaded.
    detail::parallel_for(config.runs, config.exec.workers, [&](std::size_t r) {
        const std::uint64_t run_seed = config.seed + r;
        const Split split = stratified_split(ds.labels, config.test_fraction, run_seed);

        auto [train, scaling] = io::normalize(select_rows(ds, split.train));
        Dataset test = select_rows(ds, split.test);
        scaling.apply(test.features);

        Dataset fitted;
        switch (config.method) {
            case Method::None:
                fitted = std::move(train);
                break;
            case Method::AxelSmote: {
                AxelParams params = config.params;
                params.seed = run_seed;
                auto res = resample(train, params);
                for (auto& w : res.batch.warnings) run_warnings[r].push_back(std::move(w));
                fitted = std::move(res.augmented);
                break;
            }
            case Method::Smote:
                fitted = smote_resample(train, config.smote_k, config.params.strategy, run_seed).augmented;
                break;
        }

        const auto predicted = knn_classify(fitted, test.features, config.classifier_k);
        RunMetrics& m = result.runs[r];
        m.seed = run_seed;
        m.f1_macro = f1_score(test.labels, predicted, Averaging::Macro).value;
        m.balanced_accuracy = balanced_accuracy(test.labels, predicted).value;
        m.train_rows = fitted.rows();
        m.test_rows = test.rows();
    });

    std::vector<double> f1s;
    std::vector<double> baccs;
    for (const auto& m : result.runs) {
        f1s.push_back(m.f1_macro);
        baccs.push_back(m.balanced_accuracy);
    }
    const auto f1 = summarize(f1s);
    const auto bacc = summarize(baccs);
    result.f1_mean = f1.mean;
    result.f1_std = f1.std;
    result.balanced_accuracy_mean = bacc.mean;
    result.balanced_accuracy_std = bacc.std;
    for (auto& ws : run_warnings) {
        for (auto& w : ws) {
            if (std::find(result.warnings.begin(), result.warnings.end(), w) == result.warnings.end()) {
                result.warnings.push_back(std::move(w));
            }
        }
    }
    return result;
}

}  // namespace axelsmote
