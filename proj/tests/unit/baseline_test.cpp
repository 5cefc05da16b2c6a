#include <gtest/gtest.h>

#include <algorithm>

#include "axelsmote/baseline.hpp"
#include "axelsmote/knn.hpp"
#include "support/fixtures.hpp"

using namespace axelsmote;

TEST(SmoteInterpolate, Examples) {
    const std::vector<double> base{0.0, 0.0}, nb{1.0, 2.0};
    EXPECT_EQ(smote_interpolate(base, nb, 0.5), (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(smote_interpolate(base, nb, 0.0), base);
}

TEST(SmoteResample, BalancesAndPreservesOriginals) {
    const Dataset ds = fixtures::random_normalized({90, 10}, 4, 6);
    const auto res = smote_resample(ds, 5, {}, 3);
    ASSERT_EQ(res.augmented.rows(), 180u);
    EXPECT_EQ(res.samples.size(), 80u);
    EXPECT_EQ(res.per_class_counts.at(1), 80u);
    for (std::size_t r = 0; r < ds.rows(); ++r) {
        for (std::size_t c = 0; c < ds.dims(); ++c) EXPECT_EQ(res.augmented.features(r, c), ds.features(r, c));
    }
}

TEST(SmoteResample, SamplesLieOnNeighborSegments) {
    const Dataset ds = fixtures::random_normalized({60, 15, 8}, 5, 7);
    const auto res = smote_resample(ds, 3, {}, 11);
    for (std::size_t i = 0; i < res.samples.size(); ++i) {
        const auto& s = res.samples[i];
        const std::size_t row = ds.rows() + i;
        EXPECT_EQ(res.augmented.labels[row], s.class_id);
        EXPECT_EQ(ds.labels[s.base_index], s.class_id);
        const auto nl = same_class_knn(ds, s.base_index, 3);
        EXPECT_NE(std::find(nl.indices.begin(), nl.indices.end(), s.neighbor_index), nl.indices.end());
        EXPECT_GE(s.gap, 0.0);
        EXPECT_LT(s.gap, 1.0);
        for (std::size_t c = 0; c < ds.dims(); ++c) {
            const double b = ds.features(s.base_index, c), n = ds.features(s.neighbor_index, c);
            const double v = res.augmented.features(row, c);
            EXPECT_NEAR(v, b + s.gap * (n - b), 1e-15);
            EXPECT_GE(v, std::min(b, n));
            EXPECT_LE(v, std::max(b, n));
        }
    }
}

TEST(SmoteResample, DeterministicAcrossWorkers) {
    const Dataset ds = fixtures::random_normalized({100, 20}, 6, 8);
    EXPECT_EQ(smote_resample(ds, 5, {}, 1, {1}).augmented, smote_resample(ds, 5, {}, 1, {3}).augmented);
}

TEST(SmoteResample, SingletonClassIsAnError) {
    const Dataset ds = fixtures::random_normalized({20, 1}, 3, 9);
    try {
        smote_resample(ds, 5, {}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingletonClass);
    }
}
