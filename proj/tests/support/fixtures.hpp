#pragma once

// Test-only dataset builders. They draw from std::mt19937_64 (fully specified
// by the standard) so fixtures do not depend on the library's own streams.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "axelsmote/core.hpp"

namespace axelsmote::fixtures {

inline double unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0);
}

inline double gauss(std::mt19937_64& g) {
    const double u1 = 1.0 - unit(g);
    const double u2 = unit(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

/// Uniform [0,1) features; `counts[c]` rows of class c, classes interleaved
/// in a fixed shuffled order.
inline Dataset random_normalized(const std::vector<std::size_t>& counts, std::size_t d,
                                 std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::vector<ClassId> labels;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        for (std::size_t i = 0; i < counts[c]; ++i) labels.push_back(static_cast<ClassId>(c));
    }
    for (std::size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[g() % i]);
    Dataset ds;
    ds.features = Matrix(labels.size(), d);
    for (double& v : ds.features.data()) v = unit(g);
    ds.labels = std::move(labels);
    ds.normalized = true;
    return ds;
}

/// Small-integer coordinates so that distance ties are common.
inline Dataset random_lattice(std::size_t n, std::size_t d, std::size_t classes, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    Dataset ds;
    ds.features = Matrix(n, d);
    for (double& v : ds.features.data()) v = static_cast<double>(g() % 4);
    for (std::size_t i = 0; i < n; ++i) ds.labels.push_back(static_cast<ClassId>(g() % classes));
    return ds;
}

/// Two 2-D Gaussian blobs with unit variance, means one unit apart per axis.
inline Dataset gaussian_pair(std::size_t majority, std::size_t minority, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    Dataset ds;
    ds.features = Matrix(0, 2);
    for (std::size_t i = 0; i < majority; ++i) {
        const double row[2] = {gauss(g), gauss(g)};
        ds.features.append_row(row);
        ds.labels.push_back(0);
    }
    for (std::size_t i = 0; i < minority; ++i) {
        const double row[2] = {1.0 + gauss(g), 1.0 + gauss(g)};
        ds.features.append_row(row);
        ds.labels.push_back(1);
    }
    return ds;
}

}  // namespace axelsmote::fixtures
