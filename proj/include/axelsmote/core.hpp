#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axelsmote/errors.hpp"

namespace axelsmote {

using ClassId = int;

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    /// Builds from nested rows; all rows must have the same length.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<double> row(std::size_t r) noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    void append_row(std::span<const double> values);

    [[nodiscard]] const std::vector<double>& data() const noexcept { return data_; }
    [[nodiscard]] std::vector<double>& data() noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct Dataset {
    Matrix features;
    std::vector<ClassId> labels;
    std::vector<std::string> feature_names;  // empty or one per column
    bool normalized = false;

    [[nodiscard]] std::size_t rows() const noexcept { return features.rows(); }
    [[nodiscard]] std::size_t dims() const noexcept { return features.cols(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Checks every Dataset invariant in O(n*d) and returns the dataset unchanged.
/// Throws Error{EmptyDataset | DimensionMismatch | NonFiniteValue}.
const Dataset& validate_dataset(const Dataset& ds);

/// Per-class sample counts, ordered by class id.
std::map<ClassId, std::size_t> class_counts(std::span<const ClassId> labels);

/// Row indices of every sample with the given label, ascending.
std::vector<std::size_t> class_members(const Dataset& ds, ClassId class_id);

struct SamplingStrategy {
    enum class Kind { BalanceToMajority, TargetCounts, Ratio };

    Kind kind = Kind::BalanceToMajority;
    /// TargetCounts: desired final size per class; unlisted classes are left alone.
    std::map<ClassId, std::size_t> targets;
    /// Ratio: each class is grown to ceil(ratio * majority count).
    double ratio = 1.0;
    /// When set, only classes with count < gamma * majority are oversampled.
    std::optional<double> minority_gamma;

    static SamplingStrategy balance_to_majority() { return {}; }
    static SamplingStrategy target_counts(std::map<ClassId, std::size_t> t);
    static SamplingStrategy ratio_of_majority(double r);
};

enum class NeighborSubset {
    Uniform,  // subset size uniform in {1..|N|}, members drawn without replacement
    Full,     // every neighbor, nearest first
};

struct AxelParams {
    std::size_t k = 2;
    std::size_t traits = 4;
    double theta = 0.4;
    double alpha = 0.4;
    double noise_scale = 0.05;
    bool diversity_injection = true;
    NeighborSubset neighbor_subset = NeighborSubset::Uniform;
    bool clip_to_unit = false;
    SamplingStrategy strategy;
    std::uint64_t seed = 0;

    /// Dataset-independent checks (k >= 1, t >= 1, theta/alpha in [0,1], ...).
    void validate() const;
};

struct ExecutionOptions {
    unsigned workers = 1;
};

}  // namespace axelsmote
