#include "axelsmote/core.hpp"

#include <cmath>

namespace axelsmote {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix buffer has " + std::to_string(data_.size()) + " values, expected " +
                        std::to_string(rows_ * cols_));
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    if (rows.empty()) return m;
    m.cols_ = rows.front().size();
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const double> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "row has " + std::to_string(values.size()) + " values, expected " +
                        std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

const Dataset& validate_dataset(const Dataset& ds) {
    const std::size_t n = ds.rows();
    const std::size_t d = ds.dims();
    if (n == 0 || d == 0) {
        throw Error(ErrorCode::EmptyDataset, "dataset must have at least one row and one feature");
    }
    if (ds.labels.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(ds.labels.size()) +
                                                      " labels for " + std::to_string(n) + " rows");
    }
    if (!ds.feature_names.empty() && ds.feature_names.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, std::to_string(ds.feature_names.size()) +
                                                      " feature names for " + std::to_string(d) +
                                                      " columns");
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (ds.labels[r] < 0) {
            throw Error(ErrorCode::InvalidArgument,
                        "negative class label at row " + std::to_string(r));
        }
        for (std::size_t c = 0; c < d; ++c) {
            if (!std::isfinite(ds.features(r, c))) {
                throw Error(ErrorCode::NonFiniteValue,
                            "non-finite value at (" + std::to_string(r) + ", " +
                                std::to_string(c) + ")",
                            CellLocation{r, c});
            }
        }
    }
    if (ds.normalized) {
        constexpr double kTol = 1e-9;
        for (double v : ds.features.data()) {
            if (v < -kTol || v > 1.0 + kTol) {
                throw Error(ErrorCode::InvalidArgument,
                            "dataset flagged normalized but has a value outside [0, 1]");
            }
        }
    }
    return ds;
}

std::map<ClassId, std::size_t> class_counts(std::span<const ClassId> labels) {
    std::map<ClassId, std::size_t> counts;
    for (ClassId c : labels) ++counts[c];
    return counts;
}

std::vector<std::size_t> class_members(const Dataset& ds, ClassId class_id) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ds.labels.size(); ++i) {
        if (ds.labels[i] == class_id) out.push_back(i);
    }
    return out;
}

SamplingStrategy SamplingStrategy::target_counts(std::map<ClassId, std::size_t> t) {
    SamplingStrategy s;
    s.kind = Kind::TargetCounts;
    s.targets = std::move(t);
    return s;
}

SamplingStrategy SamplingStrategy::ratio_of_majority(double r) {
    SamplingStrategy s;
    s.kind = Kind::Ratio;
    s.ratio = r;
    return s;
}

void AxelParams::validate() const {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (traits < 1) throw Error(ErrorCode::InvalidArgument, "trait count must be at least 1");
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "theta must lie in [0, 1]");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
    }
    if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
        throw Error(ErrorCode::InvalidArgument, "noise scale must be finite and non-negative");
    }
    if (strategy.kind == SamplingStrategy::Kind::Ratio &&
        !(strategy.ratio > 0.0 && strategy.ratio <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "ratio strategy needs 0 < ratio <= 1");
    }
    if (strategy.minority_gamma && !(*strategy.minority_gamma > 0.0 && *strategy.minority_gamma < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
    }
}

}  // namespace axelsmote
