#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote {

/// Nearest same-class neighbors of one query row, closest first. Equal
/// distances are ordered by ascending row index.
struct NeighborList {
    std::vector<std::size_t> indices;
    std::vector<double> distances;

    [[nodiscard]] std::size_t size() const noexcept { return indices.size(); }
    [[nodiscard]] bool empty() const noexcept { return indices.empty(); }
};

double euclidean_distance(std::span<const double> a, std::span<const double> b) noexcept;

/// Exact brute-force search over the query's class, excluding the query row.
/// Returns min(k, |class| - 1) neighbors. Throws SingletonClass when the
/// query is the only member of its class.
NeighborList same_class_knn(const Dataset& ds, std::size_t query_index, std::size_t k);

/// Same as above but restricted to a precomputed candidate set (the class
/// members). Used by the resamplers to avoid rescanning the whole dataset.
NeighborList knn_among(const Dataset& ds, std::size_t query_index,
                       std::span<const std::size_t> candidates, std::size_t k);

}  // namespace axelsmote
