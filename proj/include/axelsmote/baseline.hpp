#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote {

struct SmoteSample {
    ClassId class_id = 0;
    std::size_t base_index = 0;
    std::size_t neighbor_index = 0;
    double gap = 0.0;  // interpolation position along base -> neighbor
};

struct SmoteResult {
    Dataset augmented;
    std::vector<SmoteSample> samples;
    std::map<ClassId, std::size_t> per_class_counts;
};

/// base + gap * (neighbor - base), per feature, kept on the closed segment.
std::vector<double> smote_interpolate(std::span<const double> base,
                                      std::span<const double> neighbor, double gap);

/// Classic SMOTE: uniform base, one uniform neighbor among its k nearest
/// same-class rows, uniform gap in [0, 1). Throws SingletonClass if a class
/// that needs samples has only one member.
SmoteResult smote_resample(const Dataset& ds, std::size_t k, const SamplingStrategy& strategy,
                           std::uint64_t seed, const ExecutionOptions& exec = {});

}  // namespace axelsmote
