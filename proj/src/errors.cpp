#include "axelsmote/errors.hpp"

namespace axelsmote {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::SingletonClass: return "SingletonClass";
        case ErrorCode::TraitCountExceedsFeatures: return "TraitCountExceedsFeatures";
        case ErrorCode::UnknownClass: return "UnknownClass";
        case ErrorCode::InvalidTarget: return "InvalidTarget";
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingLabelColumn: return "MissingLabelColumn";
        case ErrorCode::EmptyFile: return "EmptyFile";
        case ErrorCode::AllMissingColumn: return "AllMissingColumn";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::StratificationError: return "StratificationError";
    }
    return "Unknown";
}

bool is_config_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::TraitCountExceedsFeatures:
        case ErrorCode::InvalidTarget:
        case ErrorCode::InvalidDimension:
        case ErrorCode::MissingLabelColumn:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<CellLocation> where)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      where_(where) {}

}  // namespace axelsmote
