#include "axelsmote/baseline.hpp"

#include <algorithm>

#include "axelsmote/axelsmote.hpp"
#include "axelsmote/knn.hpp"
#include "axelsmote/rng.hpp"
#include "parallel.hpp"

namespace axelsmote {

std::vector<double> smote_interpolate(std::span<const double> base,
                                      std::span<const double> neighbor, double gap) {
    std::vector<double> out(base.size());
    for (std::size_t p = 0; p < base.size(); ++p) {
        const double v = base[p] + gap * (neighbor[p] - base[p]);
        out[p] = std::clamp(v, std::min(base[p], neighbor[p]), std::max(base[p], neighbor[p]));
    }
    return out;
}

SmoteResult smote_resample(const Dataset& ds, std::size_t k, const SamplingStrategy& strategy,
                           std::uint64_t seed, const ExecutionOptions& exec) {
    validate_dataset(ds);
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    const CountPlan plan = plan_counts(ds, strategy);
    if (!plan.skipped.empty()) {
        throw Error(ErrorCode::SingletonClass, "class " + std::to_string(plan.skipped.front()) +
                                                   " needs oversampling but has a single member");
    }

    struct Job {
        ClassId class_id;
        std::size_t sample_index;
    };
    std::map<ClassId, std::vector<std::size_t>> members;
    std::vector<Job> jobs;
    for (const auto& [c, count] : plan.counts) {
        if (count == 0) continue;
        members.emplace(c, class_members(ds, c));
        for (std::size_t j = 0; j < count; ++j) jobs.push_back({c, j});
    }

    SmoteResult result;
    result.per_class_counts = plan.counts;
    result.samples.resize(jobs.size());
    std::vector<std::vector<double>> rows(jobs.size());

    detail::parallel_for(jobs.size(), exec.workers, [&](std::size_t i) {
        const auto [c, j] = jobs[i];
        const auto& pool = members.at(c);
        auto base_rng = derive_stream(seed, stream_tag::kSmoteBase, c, j);
        auto neighbor_rng = derive_stream(seed, stream_tag::kSmoteNeighbor, c, j);
        auto gap_rng = derive_stream(seed, stream_tag::kSmoteGap, c, j);

        const std::size_t base = pool[base_rng.uniform_index(pool.size())];
        const auto neighbors = knn_among(ds, base, pool, k);
        const std::size_t neighbor = neighbors.indices[neighbor_rng.uniform_index(neighbors.size())];
        const double gap = gap_rng.uniform01();

        result.samples[i] = {c, base, neighbor, gap};
        rows[i] = smote_interpolate(ds.features.row(base), ds.features.row(neighbor), gap);
    });

    result.augmented = ds;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        result.augmented.features.append_row(rows[i]);
        result.augmented.labels.push_back(jobs[i].class_id);
    }
    return result;
}

}  // namespace axelsmote
