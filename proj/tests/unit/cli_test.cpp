#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "axelsmote/io.hpp"
#include "cli.hpp"
#include "support/fixtures.hpp"

using namespace axelsmote;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("axelsmote_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
        Dataset ds = fixtures::gaussian_pair(90, 10, 3);
        ds.feature_names = {"x", "y"};
        io::LabelMapping labels;
        labels.encode("major");
        labels.encode("minor");
        io::export_csv(ds, labels, path("data.csv"));
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
    }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ResampleBalancesAndIsReproducible) {
    auto r = invoke({"resample", path("data.csv"), path("a.csv"), "--traits", "2", "--seed", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("minor"), std::string::npos);
    r = invoke({"resample", path("data.csv"), path("b.csv"), "--traits", "2", "--seed", "5", "--workers", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));

    io::CsvSchema s;
    s.label_column = std::string("class");
    const auto back = io::load_csv(path("a.csv"), s);
    EXPECT_EQ(back.data.rows(), 180u);
}

TEST_F(CliTest, ResampleWithProvenanceAndSmote) {
    auto r = invoke({"resample", path("data.csv"), path("p.csv"), "-t", "1", "--provenance", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report_version"], 1);
    EXPECT_EQ(j["command"], "resample");
    EXPECT_EQ(j["synthetic_samples"], 80);
    EXPECT_NE(slurp(path("p.csv")).find("is_synthetic,base_index"), std::string::npos);

    r = invoke({"resample", path("data.csv"), path("s.csv"), "--method", "smote", "--k", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, Stats) {
    const auto r = invoke({"stats", path("data.csv"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["imbalance_ratio"].get<double>(), 9.0);
    EXPECT_EQ(j["rows"], 100);
    EXPECT_EQ(j["minority_classes"], nlohmann::json::array({"minor"}));
}

TEST_F(CliTest, EvaluateTextAndJson) {
    auto r = invoke({"evaluate", path("data.csv"), "-t", "2", "--runs", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("F1 (macro):"), std::string::npos);
    EXPECT_EQ(r.out.find("±"), std::string::npos);

    r = invoke({"evaluate", path("data.csv"), "-t", "2", "--runs", "3", "--json", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"]["runs"].size(), 3u);
    EXPECT_EQ(j["seed"], 4);
    EXPECT_TRUE(j["results"]["f1_macro"]["std"].is_number());
    EXPECT_EQ(invoke({"evaluate", path("data.csv"), "-t", "2", "--runs", "3", "--json", "--seed", "4"}).out,
              r.out);
}

TEST_F(CliTest, SweepSkipsOversizedTraitCounts) {
    const auto r = invoke({"sweep", path("data.csv"), "--k-grid", "2", "--traits-grid", "1,2,4",
                           "--theta-grid", "0.4", "--alpha-grid", "0.4", "--runs", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["results"].size(), 2u);
}

TEST_F(CliTest, SimulateAxelrod) {
    const auto r = invoke({"simulate-axelrod", "--L", "5", "--f", "3", "--q", "2", "--seed", "7", "--json",
                           "--grid-out", path("grid.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["results"]["converged"].get<bool>());
    const std::string grid = slurp(path("grid.csv"));
    EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 25);

    const auto lone = invoke({"simulate-axelrod", "--L", "1", "--f", "3", "--q", "5", "--json"});
    ASSERT_EQ(lone.code, 0) << lone.err;
    const auto k = nlohmann::json::parse(lone.out);
    EXPECT_TRUE(k["results"]["converged"].get<bool>());
    EXPECT_EQ(k["results"]["region_count"], 1);
    EXPECT_EQ(invoke({"simulate-axelrod", "--L", "0"}).code, 2);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(invoke({"resample", path("data.csv"), path("o.csv"), "--traits", "50"}).code, 2);
    EXPECT_EQ(invoke({"resample", path("data.csv"), path("o.csv"), "--theta", "3"}).code, 2);
    EXPECT_EQ(invoke({"stats", path("missing.csv")}).code, 3);

    write("bad.csv", "a,b\n1,x\nfoo,y\n");
    EXPECT_EQ(invoke({"stats", path("bad.csv")}).code, 3);

    write("single.csv", "a,b\n0.1,x\n0.2,x\n0.3,x\n0.4,y\n");
    EXPECT_EQ(invoke({"evaluate", path("single.csv"), "-t", "1"}).code, 4);

    EXPECT_EQ(invoke({"--help"}).code, 0);
}
