#include "axelsmote/knn.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace axelsmote {

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

NeighborList knn_among(const Dataset& ds, std::size_t query_index,
                       std::span<const std::size_t> candidates, std::size_t k) {
    if (query_index >= ds.rows()) {
        throw Error(ErrorCode::InvalidArgument,
                    "query index " + std::to_string(query_index) + " out of range");
    }
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");

    const auto query = ds.features.row(query_index);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(candidates.size());
    for (std::size_t idx : candidates) {
        if (idx == query_index) continue;
        scored.emplace_back(euclidean_distance(query, ds.features.row(idx)), idx);
    }
    if (scored.empty()) {
        throw Error(ErrorCode::SingletonClass,
                    "class " + std::to_string(ds.labels[query_index]) + " has a single member");
    }

    const std::size_t take = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                      scored.end());

    NeighborList out;
    out.indices.reserve(take);
    out.distances.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        out.distances.push_back(scored[i].first);
        out.indices.push_back(scored[i].second);
    }
    return out;
}

NeighborList same_class_knn(const Dataset& ds, std::size_t query_index, std::size_t k) {
    if (query_index >= ds.rows()) {
        throw Error(ErrorCode::InvalidArgument,
                    "query index " + std::to_string(query_index) + " out of range");
    }
    const auto members = class_members(ds, ds.labels[query_index]);
    return knn_among(ds, query_index, members, k);
}

}  // namespace axelsmote
