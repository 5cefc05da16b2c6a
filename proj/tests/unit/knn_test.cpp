#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "axelsmote/knn.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace axelsmote;

TEST(SameClassKnn, OneDimensionalExample) {
    Dataset ds;
    ds.features = Matrix::from_rows({{0.0}, {1.0}, {3.0}, {10.0}, {2.0}});
    ds.labels = {0, 0, 0, 0, 1};
    const auto nl = same_class_knn(ds, 0, 2);
    EXPECT_EQ(nl.indices, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(nl.distances, (std::vector<double>{1.0, 3.0}));
}

TEST(SameClassKnn, SingletonClass) {
    Dataset ds;
    ds.features = Matrix::from_rows({{0.0}, {1.0}, {3.0}});
    ds.labels = {0, 0, 1};
    try {
        same_class_knn(ds, 2, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingletonClass);
    }
}

TEST(SameClassKnn, TiesBrokenByRowIndex) {
    Dataset ds;
    ds.features = Matrix(8, 1, 50.0);
    ds.features(0, 0) = 0.0;
    ds.features(7, 0) = 2.0;
    ds.features(4, 0) = -2.0;  // same distance as row 7
    ds.labels.assign(8, 0);
    const auto nl = same_class_knn(ds, 0, 2);
    EXPECT_EQ(nl.indices, (std::vector<std::size_t>{4, 7}));
    EXPECT_EQ(nl.distances, (std::vector<double>{2.0, 2.0}));
}

TEST(SameClassKnn, ReturnsAllWhenClassIsSmall) {
    Dataset ds;
    ds.features = Matrix::from_rows({{0.0}, {1.0}, {3.0}});
    ds.labels = {0, 0, 0};
    EXPECT_EQ(same_class_knn(ds, 1, 10).size(), 2u);
}

TEST(SameClassKnn, RejectsBadArguments) {
    Dataset ds;
    ds.features = Matrix::from_rows({{0.0}, {1.0}});
    ds.labels = {0, 0};
    EXPECT_THROW(same_class_knn(ds, 5, 1), Error);
    EXPECT_THROW(same_class_knn(ds, 0, 0), Error);
}

TEST(SameClassKnn, MatchesBruteForceOracle) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::size_t n = 20 + seed * 7;
        const std::size_t d = 1 + seed % 6;
        const Dataset ds = fixtures::random_lattice(n, d, 1 + seed % 4, seed);
        for (std::size_t q = 0; q < n; ++q) {
            const bool singleton = std::count(ds.labels.begin(), ds.labels.end(), ds.labels[q]) == 1;
            for (std::size_t k = 1; k <= 10; ++k) {
                if (singleton) {
                    EXPECT_THROW(same_class_knn(ds, q, k), Error);
                    continue;
                }
                const auto got = same_class_knn(ds, q, k);
                const auto want = oracles::knn(ds, q, k);
                ASSERT_EQ(got.indices, want.indices) << "seed " << seed << " q " << q << " k " << k;
                ASSERT_EQ(got.distances, want.distances);
                for (std::size_t i = 0; i < got.size(); ++i) {
                    EXPECT_NE(got.indices[i], q);
                    EXPECT_EQ(ds.labels[got.indices[i]], ds.labels[q]);
                    if (i) EXPECT_LE(got.distances[i - 1], got.distances[i]);
                }
            }
        }
    }
}
