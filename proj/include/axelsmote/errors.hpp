#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace axelsmote {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NonFiniteValue,
    EmptyDataset,
    SingletonClass,
    TraitCountExceedsFeatures,
    UnknownClass,
    InvalidTarget,
    InvalidDimension,
    LengthMismatch,
    EmptyTrainingSet,
    ParseError,
    MissingLabelColumn,
    EmptyFile,
    AllMissingColumn,
    IoError,
    StratificationError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by the caller's configuration rather than the data
/// (the CLI maps these to exit code 2, everything else to 3 or 4).
bool is_config_error(ErrorCode code) noexcept;

/// Cell location attached to parse and finiteness errors. Rows and columns are
/// zero-based data coordinates (header excluded).
struct CellLocation {
    std::size_t row = 0;
    std::size_t column = 0;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<CellLocation> where = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::optional<CellLocation>& location() const noexcept { return where_; }

private:
    ErrorCode code_;
    std::optional<CellLocation> where_;
};

}  // namespace axelsmote
