#include "axelsmote/axelsmote.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "axelsmote/rng.hpp"
#include "parallel.hpp"

namespace axelsmote {

TraitPartition partition_traits(std::size_t d, std::size_t t) {
    if (t == 0) throw Error(ErrorCode::InvalidArgument, "trait count must be at least 1");
    if (t > d) {
        throw Error(ErrorCode::TraitCountExceedsFeatures,
                    std::to_string(t) + " traits requested for " + std::to_string(d) + " features");
    }
    const std::size_t width = d / t;
    TraitPartition partition;
    partition.feature_count = d;
    partition.traits.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
        const std::size_t begin = j * width;
        const std::size_t end = (j + 1 == t) ? d : begin + width;
        partition.traits.push_back({begin, end});
    }
    return partition;
}

double trait_similarity(std::span<const double> a, std::span<const double> b,
                        TraitRange trait) noexcept {
    double total = 0.0;
    for (std::size_t q = trait.begin; q < trait.end; ++q) total += std::abs(a[q] - b[q]);
    return 1.0 - total / static_cast<double>(trait.size());
}

std::vector<double> compute_class_ranges(const Dataset& ds, ClassId class_id) {
    const std::size_t d = ds.dims();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    bool seen = false;
    for (std::size_t r = 0; r < ds.rows(); ++r) {
        if (ds.labels[r] != class_id) continue;
        seen = true;
        const auto row = ds.features.row(r);
        for (std::size_t p = 0; p < d; ++p) {
            lo[p] = std::min(lo[p], row[p]);
            hi[p] = std::max(hi[p], row[p]);
        }
    }
    if (!seen) throw Error(ErrorCode::UnknownClass, "class " + std::to_string(class_id) + " has no samples");
    std::vector<double> ranges(d);
    for (std::size_t p = 0; p < d; ++p) ranges[p] = hi[p] - lo[p];
    return ranges;
}

CountPlan plan_counts(const Dataset& ds, const SamplingStrategy& strategy) {
    const auto counts = class_counts(ds.labels);
    if (counts.empty()) throw Error(ErrorCode::EmptyDataset, "no samples to plan for");

    std::size_t majority = 0;
    for (const auto& [c, n] : counts) majority = std::max(majority, n);

    if (strategy.kind == SamplingStrategy::Kind::TargetCounts) {
        for (const auto& [c, target] : strategy.targets) {
            if (!counts.contains(c)) {
                throw Error(ErrorCode::UnknownClass,
                            "target given for absent class " + std::to_string(c));
            }
        }
    }

    CountPlan plan;
    for (const auto& [c, n] : counts) {
        std::size_t target = n;
        switch (strategy.kind) {
            case SamplingStrategy::Kind::BalanceToMajority:
                target = majority;
                break;
            case SamplingStrategy::Kind::Ratio:
                target = std::max(n, static_cast<std::size_t>(
                                         std::ceil(strategy.ratio * static_cast<double>(majority))));
                break;
            case SamplingStrategy::Kind::TargetCounts:
                if (auto it = strategy.targets.find(c); it != strategy.targets.end()) {
                    if (it->second < n) {
                        throw Error(ErrorCode::InvalidTarget,
                                    "target " + std::to_string(it->second) + " for class " +
                                        std::to_string(c) + " is below its current count " +
                                        std::to_string(n));
                    }
                    target = it->second;
                }
                break;
        }
        if (strategy.minority_gamma &&
            !(static_cast<double>(n) < *strategy.minority_gamma * static_cast<double>(majority))) {
            target = n;
        }
        std::size_t demand = target - n;
        if (demand > 0 && n <= 1) {
            plan.skipped.push_back(c);
            demand = 0;
        }
        plan.counts[c] = demand;
    }
    return plan;
}

namespace {

struct ClassContext {
    std::vector<std::size_t> members;
    std::vector<double> ranges;
};

std::size_t draw_base(std::span<const std::size_t> members, std::uint64_t seed, ClassId c,
                      std::size_t sample_index) {
    auto rng = derive_stream(seed, stream_tag::kBase, c, sample_index);
    return members[rng.uniform_index(members.size())];
}

// Convex combination w*a + (1-w)*b, kept inside [min(a,b), max(a,b)] so that
// rounding cannot leave the segment.
double blend(double w, double a, double b) noexcept {
    const double v = w * a + (1.0 - w) * b;
    return std::clamp(v, std::min(a, b), std::max(a, b));
}

SyntheticSample synthesize(const Dataset& ds, ClassId c, std::size_t sample_index,
                           std::size_t base, const NeighborList& neighbors,
                           const TraitPartition& partition, std::span<const double> ranges,
                           const AxelParams& params) {
    const auto base_row = ds.features.row(base);

    SyntheticSample out;
    out.values.assign(base_row.begin(), base_row.end());
    out.class_id = c;
    out.base_index = base;

    auto subset_rng = derive_stream(params.seed, stream_tag::kSubset, c, sample_index);
    auto exchange_rng = derive_stream(params.seed, stream_tag::kExchange, c, sample_index);
    auto blend_rng = derive_stream(params.seed, stream_tag::kBlend, c, sample_index);

    const std::size_t available = neighbors.size();
    std::vector<bool> exchanged(partition.size(), false);
    std::vector<std::size_t> chosen;

    for (std::size_t ti = 0; ti < partition.size(); ++ti) {
        const TraitRange trait = partition.traits[ti];
        if (params.neighbor_subset == NeighborSubset::Full) {
            chosen.resize(available);
            for (std::size_t i = 0; i < available; ++i) chosen[i] = i;
        } else {
            const std::size_t subset_size = 1 + subset_rng.uniform_index(available);
            chosen = subset_rng.sample_without_replacement(available, subset_size);
        }

        for (std::size_t pos : chosen) {
            const std::size_t neighbor = neighbors.indices[pos];
            const auto neighbor_row = ds.features.row(neighbor);
            // Similarity is always against the original base sample.
            if (trait_similarity(base_row, neighbor_row, trait) > params.theta &&
                exchange_rng.uniform01() < params.alpha) {
                const double lambda = blend_rng.beta22();
                for (std::size_t p = trait.begin; p < trait.end; ++p) {
                    out.values[p] = blend(lambda, base_row[p], neighbor_row[p]);
                }
                exchanged[ti] = true;
                out.blend_log.push_back({ti, neighbor, lambda});
            }
        }
    }

    for (std::size_t ti = 0; ti < exchanged.size(); ++ti) {
        if (exchanged[ti]) out.exchanged_traits.push_back(ti);
    }

    if (params.diversity_injection) {
        auto noise_rng = derive_stream(params.seed, stream_tag::kNoise, c, sample_index);
        if (noise_rng.uniform01() < params.alpha && !out.exchanged_traits.empty()) {
            for (std::size_t ti : out.exchanged_traits) {
                const TraitRange trait = partition.traits[ti];
                for (std::size_t p = trait.begin; p < trait.end; ++p) {
                    out.values[p] += params.noise_scale * ranges[p] * noise_rng.standard_normal();
                }
            }
            out.noise_applied = true;
        }
    }

    if (params.clip_to_unit) {
        for (std::size_t ti : out.exchanged_traits) {
            const TraitRange trait = partition.traits[ti];
            for (std::size_t p = trait.begin; p < trait.end; ++p) {
                out.values[p] = std::clamp(out.values[p], 0.0, 1.0);
            }
        }
    }
    return out;
}

void check_partition(const Dataset& ds, const TraitPartition& partition) {
    if (partition.feature_count != ds.dims() || partition.traits.empty()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "trait partition covers " + std::to_string(partition.feature_count) +
                        " features, dataset has " + std::to_string(ds.dims()));
    }
}

}  // namespace

SyntheticSample generate_one(const Dataset& ds, ClassId class_id, std::size_t sample_index,
                             const TraitPartition& partition, const AxelParams& params) {
    params.validate();
    check_partition(ds, partition);
    const auto members = class_members(ds, class_id);
    if (members.empty()) {
        throw Error(ErrorCode::UnknownClass, "class " + std::to_string(class_id) + " has no samples");
    }
    if (members.size() < 2) {
        throw Error(ErrorCode::SingletonClass,
                    "class " + std::to_string(class_id) + " has a single member");
    }
    const std::size_t base = draw_base(members, params.seed, class_id, sample_index);
    const auto neighbors = knn_among(ds, base, members, params.k);
    const auto ranges = compute_class_ranges(ds, class_id);
    return synthesize(ds, class_id, sample_index, base, neighbors, partition, ranges, params);
}

ResampleResult resample(const Dataset& ds, const AxelParams& params, const ExecutionOptions& exec) {
    validate_dataset(ds);
    params.validate();
    const TraitPartition partition = partition_traits(ds.dims(), params.traits);
    const CountPlan plan = plan_counts(ds, params.strategy);

    ResampleResult result;
    SyntheticBatch& batch = result.batch;
    batch.params = params;
    batch.per_class_counts = plan.counts;
    batch.skipped_classes = plan.skipped;
    if (!ds.normalized) {
        batch.warnings.emplace_back(
            "dataset is not min-max normalized; trait similarity assumes unit-scale features");
    }
    for (ClassId c : plan.skipped) {
        batch.warnings.push_back("class " + std::to_string(c) +
                                 " has fewer than two samples and was skipped");
    }

    struct Job {
        ClassId class_id;
        std::size_t sample_index;
        std::size_t base;
    };
    std::map<ClassId, ClassContext> contexts;
    std::vector<Job> jobs;
    for (const auto& [c, count] : plan.counts) {
        if (count == 0) continue;
        ClassContext ctx{class_members(ds, c), compute_class_ranges(ds, c)};
        for (std::size_t j = 0; j < count; ++j) {
            jobs.push_back({c, j, draw_base(ctx.members, params.seed, c, j)});
        }
        contexts.emplace(c, std::move(ctx));
    }

    // Neighbor lists only for rows actually drawn as a base.
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> slot_of(ds.rows(), kNone);
    std::vector<std::size_t> bases;
    for (const Job& job : jobs) {
        if (slot_of[job.base] == kNone) {
            slot_of[job.base] = bases.size();
            bases.push_back(job.base);
        }
    }
    std::vector<NeighborList> neighbor_lists(bases.size());
    detail::parallel_for(bases.size(), exec.workers, [&](std::size_t i) {
        const auto& members = contexts.at(ds.labels[bases[i]]).members;
        neighbor_lists[i] = knn_among(ds, bases[i], members, params.k);
    });

    batch.samples.resize(jobs.size());
    detail::parallel_for(jobs.size(), exec.workers, [&](std::size_t i) {
        const Job& job = jobs[i];
        batch.samples[i] = synthesize(ds, job.class_id, job.sample_index, job.base,
                                      neighbor_lists[slot_of[job.base]], partition,
                                      contexts.at(job.class_id).ranges, params);
    });

    result.augmented = ds;
    result.augmented.features.data().reserve((ds.rows() + jobs.size()) * ds.dims());
    for (const auto& s : batch.samples) {
        result.augmented.features.append_row(s.values);
        result.augmented.labels.push_back(s.class_id);
    }
    // Unclipped noise can leave the unit box.
    if (ds.normalized) {
        constexpr double kTol = 1e-9;
        for (const auto& s : batch.samples) {
            const bool inside = std::all_of(s.values.begin(), s.values.end(), [](double v) {
                return v >= -kTol && v <= 1.0 + kTol;
            });
            if (!inside) {
                result.augmented.normalized = false;
                break;
            }
        }
    }
    return result;
}

}  // namespace axelsmote
