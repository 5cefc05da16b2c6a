#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote {
struct SyntheticBatch;
struct SmoteResult;
}  // namespace axelsmote

namespace axelsmote::io {

struct CsvSchema {
    /// Column holding the class label: a header name, a zero-based index, or
    /// (monostate) the last column.
    std::variant<std::monostate, std::string, std::size_t> label_column;
    char delimiter = ',';
    bool has_header = true;
    std::set<std::string> missing_markers{"", "NA", "NaN", "?"};
};

/// Dense label encoding in first-appearance order.
class LabelMapping {
public:
    ClassId encode(const std::string& name);
    [[nodiscard]] std::optional<ClassId> find(const std::string& name) const;
    [[nodiscard]] const std::string& decode(ClassId id) const;
    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

    /// Identity-style mapping "0", "1", ... for datasets built in code.
    static LabelMapping numeric(std::size_t classes);

    friend bool operator==(const LabelMapping&, const LabelMapping&) = default;

private:
    std::vector<std::string> names_;
};

/// A dataset whose cells may be missing. Missing cells hold NaN in `features`
/// and are flagged in `missing` (row-major, same shape).
struct PartialDataset {
    Matrix features;
    std::vector<std::uint8_t> missing;
    std::vector<ClassId> labels;
    std::vector<std::string> feature_names;

    [[nodiscard]] std::size_t rows() const noexcept { return features.rows(); }
    [[nodiscard]] std::size_t dims() const noexcept { return features.cols(); }
    [[nodiscard]] bool is_missing(std::size_t r, std::size_t c) const noexcept {
        return missing[r * features.cols() + c] != 0;
    }
    [[nodiscard]] std::size_t missing_count() const noexcept;
};

struct LoadedCsv {
    PartialDataset data;
    LabelMapping labels;
    std::string label_name;  // header of the label column, "class" without a header
};

/// Throws ParseError (with cell location), MissingLabelColumn, EmptyFile, IoError.
LoadedCsv load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});
LoadedCsv read_csv(std::istream& in, const CsvSchema& schema = {});

enum class ImputeMethod { Mean, Median, Zero };

/// Fills missing cells per column. Throws AllMissingColumn if a column has no
/// observed value (Mean/Median only).
Dataset impute_missing(const PartialDataset& ds, ImputeMethod method = ImputeMethod::Mean);

/// Per-feature min/max captured from a training set.
struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;

    /// (x - min) / (max - min); constant features map to 0. Values of unseen
    /// data may fall outside [0, 1].
    void apply(Matrix& m) const;
    void invert(Matrix& m) const;
};

NormalizationParams fit_normalization(const Matrix& features);

/// Min-max scales every column to [0, 1] and sets the normalized flag.
std::pair<Dataset, NormalizationParams> normalize(const Dataset& ds);

struct ExportOptions {
    bool include_provenance = false;
    /// One entry per row: -1 for original rows, the base row for synthetic ones.
    std::vector<std::int64_t> base_indices;
    char delimiter = ',';
    std::string label_name = "class";
};

/// Provenance for `original_rows` originals followed by the batch's samples.
std::vector<std::int64_t> provenance_from(const SyntheticBatch& batch, std::size_t original_rows);
std::vector<std::int64_t> provenance_from(const SmoteResult& result, std::size_t original_rows);

/// Writes features then the decoded label (and optional provenance columns).
/// Values use 17 significant digits. Throws IoError.
void export_csv(const Dataset& ds, const LabelMapping& labels, const std::filesystem::path& path,
                const ExportOptions& options = {});
void write_csv(const Dataset& ds, const LabelMapping& labels, std::ostream& out,
               const ExportOptions& options = {});
/// Missing cells are written as empty fields.
void write_csv(const PartialDataset& ds, const LabelMapping& labels, std::ostream& out,
               const ExportOptions& options = {});

/// Locale-independent %.17g formatting used by the writer.
std::string format_number(double v);

}  // namespace axelsmote::io
