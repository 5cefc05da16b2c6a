#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "axelsmote/evaluation.hpp"
#include "support/fixtures.hpp"

using namespace axelsmote;

TEST(StratifiedSplit, PerClassCountsAndCoverage) {
    std::vector<ClassId> y(10, 0);
    y.insert(y.end(), 5, 1);
    y.insert(y.end(), 2, 2);
    const auto s = stratified_split(y, 0.2, 4);
    std::vector<std::size_t> per_class(3, 0);
    for (std::size_t i : s.test) ++per_class[y[i]];
    EXPECT_EQ(per_class, (std::vector<std::size_t>{2, 1, 1}));
    std::vector<std::size_t> all = s.train;
    all.insert(all.end(), s.test.begin(), s.test.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> want(y.size());
    std::iota(want.begin(), want.end(), std::size_t{0});
    EXPECT_EQ(all, want);
    EXPECT_TRUE(std::is_sorted(s.train.begin(), s.train.end()));
    EXPECT_TRUE(std::is_sorted(s.test.begin(), s.test.end()));
    EXPECT_EQ(stratified_split(y, 0.2, 4).test, s.test);
}

TEST(StratifiedSplit, SingletonClassFails) {
    const std::vector<ClassId> y{0, 0, 0, 1};
    try {
        stratified_split(y, 0.25, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::StratificationError);
    }
}

TEST(ParseMethod, Names) {
    EXPECT_EQ(parse_method("none"), Method::None);
    EXPECT_EQ(parse_method("axelsmote"), Method::AxelSmote);
    EXPECT_EQ(parse_method("smote"), Method::Smote);
    EXPECT_FALSE(parse_method("adasyn").has_value());
    EXPECT_EQ(to_string(Method::Smote), "smote");
}

TEST(Evaluate, SeparableDataScoresPerfectly) {
    Dataset ds;
    ds.features = Matrix(0, 1);
    for (int i = 0; i < 40; ++i) {
        const double v = i < 30 ? 0.01 * i : 10.0 + 0.01 * i;
        ds.features.append_row(std::span<const double>(&v, 1));
        ds.labels.push_back(i < 30 ? 0 : 1);
    }
    EvaluationConfig cfg;
    cfg.method = Method::None;
    cfg.runs = 3;
    const auto r = evaluate(ds, cfg);
    EXPECT_EQ(r.f1_mean, 1.0);
    EXPECT_EQ(r.balanced_accuracy_mean, 1.0);
    ASSERT_TRUE(r.f1_std.has_value());
    EXPECT_EQ(*r.f1_std, 0.0);
}

TEST(Evaluate, ArmsShareTestFoldsAndOnlyTrainGrows) {
    const Dataset ds = fixtures::gaussian_pair(200, 25, 5);
    EvaluationConfig cfg;
    cfg.runs = 4;
    cfg.params.traits = 2;
    cfg.seed = 11;
    cfg.method = Method::None;
    const auto none = evaluate(ds, cfg);
    cfg.method = Method::AxelSmote;
    const auto axel = evaluate(ds, cfg);
    cfg.method = Method::Smote;
    const auto smote = evaluate(ds, cfg);
    for (std::size_t r = 0; r < 4; ++r) {
        EXPECT_EQ(none.runs[r].seed, 11 + r);
        EXPECT_EQ(none.runs[r].test_rows, axel.runs[r].test_rows);
        EXPECT_EQ(none.runs[r].test_rows, smote.runs[r].test_rows);
        EXPECT_EQ(axel.runs[r].train_rows, 2 * 160u);
        EXPECT_EQ(smote.runs[r].train_rows, 2 * 160u);
        EXPECT_EQ(none.runs[r].train_rows, 180u);
    }
}

TEST(Evaluate, WorkerCountDoesNotChangeResults) {
    const Dataset ds = fixtures::gaussian_pair(120, 20, 6);
    EvaluationConfig cfg;
    cfg.runs = 5;
    cfg.params.traits = 2;
    const auto a = evaluate(ds, cfg);
    cfg.exec.workers = 3;
    const auto b = evaluate(ds, cfg);
    EXPECT_EQ(a.f1_mean, b.f1_mean);
    EXPECT_EQ(a.balanced_accuracy_mean, b.balanced_accuracy_mean);
}

TEST(Evaluate, SingleRunHasNoSpread) {
    const Dataset ds = fixtures::gaussian_pair(50, 10, 7);
    EvaluationConfig cfg;
    cfg.runs = 1;
    cfg.params.traits = 1;
    const auto r = evaluate(ds, cfg);
    EXPECT_FALSE(r.f1_std.has_value());
    EXPECT_FALSE(r.balanced_accuracy_std.has_value());
}
