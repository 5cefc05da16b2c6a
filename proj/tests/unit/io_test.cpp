#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "axelsmote/axelsmote.hpp"
#include "axelsmote/io.hpp"
#include "support/fixtures.hpp"

using namespace axelsmote;
using namespace axelsmote::io;

namespace {

LoadedCsv parse(const std::string& text, const CsvSchema& schema = {}) {
    std::istringstream in(text);
    return read_csv(in, schema);
}

ErrorCode parse_error(const std::string& text, const CsvSchema& schema = {}) {
    try {
        parse(text, schema);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(ReadCsv, EncodesLabelsInFirstAppearanceOrder) {
    const auto csv = parse("x,y,label\n0.1,0.2,a\n0.3,0.4,b\n0.5,0.6,a\n");
    EXPECT_EQ(csv.data.labels, (std::vector<ClassId>{0, 1, 0}));
    EXPECT_EQ(csv.labels.decode(1), "b");
    EXPECT_EQ(csv.label_name, "label");
    EXPECT_EQ(csv.data.feature_names, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(csv.data.features(2, 1), 0.6);
}

TEST(ReadCsv, LabelColumnByNameOrIndex) {
    CsvSchema s;
    s.label_column = std::string("cls");
    auto csv = parse("cls,x\nu,1\nv,2\n", s);
    EXPECT_EQ(csv.data.features(1, 0), 2.0);
    s.label_column = std::size_t{0};
    csv = parse("cls,x\nu,1\nv,2\n", s);
    EXPECT_EQ(csv.labels.names(), (std::vector<std::string>{"u", "v"}));
    s.label_column = std::string("nope");
    EXPECT_EQ(parse_error("cls,x\nu,1\n", s), ErrorCode::MissingLabelColumn);
}

TEST(ReadCsv, MissingMarkers) {
    const auto csv = parse("a,b,c\n1,?,x\nNA,2,y\n,3,x\n");
    EXPECT_TRUE(csv.data.is_missing(0, 1));
    EXPECT_TRUE(csv.data.is_missing(1, 0));
    EXPECT_TRUE(csv.data.is_missing(2, 0));
    EXPECT_TRUE(std::isnan(csv.data.features(0, 1)));
    EXPECT_EQ(csv.data.missing_count(), 3u);
}

TEST(ReadCsv, ParseErrorCarriesLocation) {
    try {
        parse("a,b,c\n1,2,x\n3,abc,y\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        ASSERT_TRUE(e.location().has_value());
        EXPECT_EQ(e.location()->column, 1u);
    }
    EXPECT_EQ(parse_error(""), ErrorCode::EmptyFile);
    EXPECT_EQ(parse_error("a,b\n1,2,3\n"), ErrorCode::ParseError);
}

TEST(ReadCsv, QuotingAndOptions) {
    const auto csv = parse("\"f,1\",label\n\" 1.5 \",\"two\nlines\"\n2,\"say \"\"hi\"\"\"\n");
    EXPECT_EQ(csv.data.feature_names[0], "f,1");
    EXPECT_EQ(csv.data.features(0, 0), 1.5);
    EXPECT_EQ(csv.labels.decode(0), "two\nlines");
    EXPECT_EQ(csv.labels.decode(1), "say \"hi\"");

    CsvSchema s;
    s.delimiter = ';';
    s.has_header = false;
    const auto raw = parse("1;2;a\n3;4;b\n", s);
    EXPECT_EQ(raw.data.rows(), 2u);
    EXPECT_EQ(raw.data.features(1, 1), 4.0);
}

TEST(Impute, MeanMedianZero) {
    const auto csv = parse("a,l\n1,x\nNA,x\n3,x\n10,y\n");
    EXPECT_EQ(impute_missing(csv.data).features(1, 0), 14.0 / 3.0);
    EXPECT_EQ(impute_missing(csv.data, ImputeMethod::Median).features(1, 0), 3.0);
    EXPECT_EQ(impute_missing(csv.data, ImputeMethod::Zero).features(1, 0), 0.0);
    const auto two = parse("a,l\n1,x\nNA,x\n3,x\n");
    EXPECT_EQ(impute_missing(two.data).features(1, 0), 2.0);
    const auto empty = parse("a,b,l\n1,NA,x\n2,?,y\n");
    try {
        impute_missing(empty.data);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AllMissingColumn);
    }
}

TEST(Normalize, ScalesAndIsIdempotent) {
    Dataset ds;
    ds.features = Matrix::from_rows({{0.0, 4.0}, {5.0, 4.0}, {10.0, 4.0}});
    ds.labels = {0, 0, 1};
    const auto [n, params] = normalize(ds);
    EXPECT_TRUE(n.normalized);
    EXPECT_EQ(n.features(1, 0), 0.5);
    EXPECT_EQ(n.features(2, 0), 1.0);
    EXPECT_EQ(n.features(0, 1), 0.0);
    EXPECT_EQ(normalize(n).first.features, n.features);
    Matrix back = n.features;
    params.invert(back);
    EXPECT_EQ(back, ds.features);
}

TEST(WriteCsv, RoundTripsExactly) {
    Dataset ds = fixtures::random_normalized({7, 5}, 3, 12);
    ds.features(0, 0) = 1e-300;
    ds.features(1, 1) = -0.1;
    ds.feature_names = {"a b", " lead", "q\"uote"};
    LabelMapping labels;
    labels.encode("neg, one");
    labels.encode("pos");
    std::ostringstream out;
    write_csv(ds, labels, out);
    const auto back = parse(out.str());
    EXPECT_EQ(back.data.features, ds.features);
    EXPECT_EQ(back.data.feature_names, ds.feature_names);
    EXPECT_EQ(back.labels, labels);
    EXPECT_EQ(back.data.labels, ds.labels);
}

TEST(WriteCsv, ProvenanceColumns) {
    const Dataset ds = fixtures::random_normalized({90, 10}, 3, 13);
    AxelParams params;
    params.traits = 3;
    const auto res = resample(ds, params);
    ExportOptions opt;
    opt.include_provenance = true;
    opt.base_indices = provenance_from(res.batch, ds.rows());
    std::ostringstream out;
    write_csv(res.augmented, LabelMapping::numeric(2), out, opt);

    CsvSchema s;
    s.label_column = std::string("class");
    const auto back = parse(out.str(), s);
    ASSERT_EQ(back.data.rows(), 180u);
    ASSERT_EQ(back.data.dims(), 5u);  // 3 features + is_synthetic + base_index
    std::size_t synthetic = 0;
    for (std::size_t r = 0; r < 180; ++r) {
        const bool syn = back.data.features(r, 3) == 1.0;
        synthetic += syn ? 1 : 0;
        EXPECT_EQ(syn, r >= 100);
        const double base = back.data.features(r, 4);
        if (syn) {
            EXPECT_EQ(ds.labels[static_cast<std::size_t>(base)], 1);
        } else {
            EXPECT_EQ(base, -1.0);
        }
    }
    EXPECT_EQ(synthetic, 80u);
}

TEST(WriteCsv, PartialDatasetKeepsMissingCells) {
    const auto csv = parse("a,b,label\n1,,x\n?,2.5,y\n");
    std::ostringstream out;
    write_csv(csv.data, csv.labels, out);
    const auto back = parse(out.str());
    EXPECT_EQ(back.data.missing, csv.data.missing);
    EXPECT_EQ(back.data.features(1, 1), 2.5);
}

TEST(FormatNumber, RoundTripsValues) {
    EXPECT_EQ(std::stod(format_number(0.1)), 0.1);
    EXPECT_EQ(format_number(1.0), "1");
}
