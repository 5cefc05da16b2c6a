#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "axelsmote/core.hpp"
#include "axelsmote/knn.hpp"

namespace axelsmote {

/// Half-open run [begin, end) of feature indices exchanged as one unit.
struct TraitRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const TraitRange&, const TraitRange&) = default;
};

/// Contiguous split of d features into t traits. The first t-1 traits hold
/// floor(d/t) features each and the last trait takes the remainder.
struct TraitPartition {
    std::vector<TraitRange> traits;
    std::size_t feature_count = 0;

    [[nodiscard]] std::size_t size() const noexcept { return traits.size(); }
};

/// Throws TraitCountExceedsFeatures when t > d, InvalidArgument when t == 0.
TraitPartition partition_traits(std::size_t d, std::size_t t);

/// 1 - mean |a_q - b_q| over the trait's features. Not clamped: unnormalized
/// inputs can produce negative values.
double trait_similarity(std::span<const double> a, std::span<const double> b,
                        TraitRange trait) noexcept;

/// One accepted exchange: trait `trait` was blended against row `neighbor`
/// with weight `lambda` on the base sample.
struct BlendEvent {
    std::size_t trait = 0;
    std::size_t neighbor = 0;
    double lambda = 0.0;
};

struct SyntheticSample {
    std::vector<double> values;
    ClassId class_id = 0;
    std::size_t base_index = 0;
    std::vector<std::size_t> exchanged_traits;  // ascending, unique
    std::vector<BlendEvent> blend_log;          // in the order the blends happened
    bool noise_applied = false;
};

struct SyntheticBatch {
    std::vector<SyntheticSample> samples;
    AxelParams params;
    std::map<ClassId, std::size_t> per_class_counts;
    std::vector<ClassId> skipped_classes;
    std::vector<std::string> warnings;
};

/// Per-feature max - min over the original members of a class.
/// Throws UnknownClass when no row carries the label.
std::vector<double> compute_class_ranges(const Dataset& ds, ClassId class_id);

struct CountPlan {
    std::map<ClassId, std::size_t> counts;  // synthetic samples to create per class
    std::vector<ClassId> skipped;           // needed samples but have <= 1 member
};

/// Synthetic sample counts per class under `strategy`. Throws InvalidTarget
/// for targets below the current count, UnknownClass for targets naming a
/// class absent from the data.
CountPlan plan_counts(const Dataset& ds, const SamplingStrategy& strategy);

/// Generates synthetic sample number `sample_index` of `class_id`. The result
/// depends only on (ds, class_id, sample_index, partition, params), so it is
/// identical to the corresponding entry produced by resample().
SyntheticSample generate_one(const Dataset& ds, ClassId class_id, std::size_t sample_index,
                             const TraitPartition& partition, const AxelParams& params);

struct ResampleResult {
    Dataset augmented;  // original rows first, in order, then synthetic rows
    SyntheticBatch batch;
};

/// Oversamples every class that the strategy asks for. Synthetic rows are
/// ordered by class id, then by sample index. Output is independent of
/// exec.workers.
ResampleResult resample(const Dataset& ds, const AxelParams& params,
                        const ExecutionOptions& exec = {});

}  // namespace axelsmote
