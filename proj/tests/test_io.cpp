#include <fatpoints/json_io.hpp>
#include <fatpoints/configs.hpp>

#include <gtest/gtest.h>

using namespace fatpoints;

namespace {

std::string config_text(const std::string &field, const std::string &points) {
    return "{\"field\": " + field + ", \"points\": " + points + "}";
}

const std::string rational = "{\"type\": \"rational\"}";

void expect_input_error(const std::string &text, const std::string &fragment) {
    try {
        config_from_text(text);
        ADD_FAILURE() << "accepted: " << text;
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

} // namespace

TEST(ConfigJson, RoundTripRational) {
    const auto ex = example_quartic_config();
    const auto j = config_to_json(ex);
    EXPECT_EQ(j["field"]["type"], "rational");
    EXPECT_EQ(j["points"].size(), 9u);
    EXPECT_EQ(config_from_json(j), ex);
    EXPECT_EQ(config_from_text(j.dump(2)), ex);
    const auto r = random_config(9, 100, 3);
    EXPECT_EQ(config_from_text(config_to_json(r).dump()), r);
}

TEST(ConfigJson, RoundTripCyclotomic) {
    const auto f3 = dual_fermat(3);
    const auto j = config_to_json(f3);
    EXPECT_EQ(j["field"]["type"], "cyclotomic");
    EXPECT_EQ(j["field"]["n"], 3);
    const auto back = config_from_json(j);
    EXPECT_EQ(back, f3);
    EXPECT_EQ(back.field()->conductor(), 3u);
}

TEST(ConfigJson, IntegerAndRationalScalars) {
    const auto z = config_from_text(config_text(rational, "[[1, 0, 0], [\"1/2\", \"-3\", 1], [0, 1, \"0\"]]"));
    ASSERT_EQ(z.size(), 3u);
    const FieldPtr q = rational_field();
    EXPECT_EQ(z[1], ProjectivePoint(Scalar(q, mpq_class(1, 2)), Scalar(q, -3), Scalar(q, 1)));
    const auto c = config_from_text(
        config_text("{\"type\": \"cyclotomic\", \"n\": 3}", "[[1, \"z\", 0], [\"1+z^2\", 0, 1]]"));
    EXPECT_EQ(c.size(), 2u);
}

TEST(ConfigJson, SyntaxErrorsCarryPosition) {
    try {
        config_from_text("{\n  \"field\": {\"type\": \"rational\"},\n  \"points\": [[1, 0, 0],, ]\n}");
        ADD_FAILURE() << "accepted malformed JSON";
    } catch (const JsonSyntaxError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 24u);
        EXPECT_EQ(std::string(e.what()).rfind("line 3, column 24: ", 0), 0u) << e.what();
    }
    try {
        parse_json_text("");
        ADD_FAILURE() << "accepted empty input";
    } catch (const JsonSyntaxError &e) {
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(ConfigJson, InvalidConfigurations) {
    expect_input_error("[1, 2]", "JSON object");
    expect_input_error("{\"points\": []}", "missing \"field\"");
    expect_input_error(config_text(rational, "{}"), "must be an array");
    expect_input_error(config_text(rational, "[]"), "is empty");
    expect_input_error(config_text(rational, "[[1, 0]]"), "point 0 must have three coordinates");
    expect_input_error(config_text(rational, "[[1, 0, 0], [0, 0, 0]]"), "point 1");
    expect_input_error(config_text(rational, "[[1, 0, 0], [2, 0, 0]]"), "configuration:");
    expect_input_error(config_text("{\"type\": \"real\"}", "[[1, 0, 0]]"), "unknown type");
    expect_input_error(config_text("{\"type\": \"cyclotomic\"}", "[[1, 0, 0]]"), "positive integer");
    expect_input_error(config_text("{\"type\": \"cyclotomic\", \"n\": 0}", "[[1, 0, 0]]"), "positive integer");
    expect_input_error(config_text(rational, "[[\"1/0\", 0, 1]]"), "zero denominator");
    expect_input_error(config_text(rational, "[[\"abc\", 0, 1]]"), "cannot parse");
    expect_input_error(config_text(rational, "[[1.5, 0, 1]]"), "expected a string or an integer");
    expect_input_error(config_text(rational, "[[\"z\", 0, 1]]"), "cannot parse");
}

TEST(ReportJson, Keys) {
    const auto ex = example_quartic_config();
    const auto r = detect_unexpected(ex, 4, GeneralPointStrategy{});
    const auto j = unexpected_report_to_json(r);
    for (const char *k : {"degree", "dimZ", "genericDim", "threshold", "unexpected", "certified", "samples",
                          "witness", "witnessPoint"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["genericDim"], 1);
    EXPECT_EQ(j["witness"].size(), monomial_count(4));
    EXPECT_EQ(j["samples"].size(), 3u);

    const auto none = unexpected_report_to_json(detect_unexpected(dual_fermat(3), 3, GeneralPointStrategy{}));
    EXPECT_FALSE(none.contains("witness"));

    const auto ls = line_stats_to_json(analyze_lines(ex));
    EXPECT_EQ(ls["histogram"]["4"], 3);
    EXPECT_EQ(ls["histogram"]["3"], 4);
    EXPECT_EQ(ls["richLines"].size(), 7u);

    const auto sp = splitting_to_json(splitting_type(ex, GeneralPointStrategy{}));
    EXPECT_EQ(sp["a"], 3);
    EXPECT_EQ(sp["b"], 5);
    EXPECT_EQ(sp["balanced"], false);

    const auto sys = linsys_report_to_json(dim_linear_system(FatPointScheme(ex), 4));
    for (const char *k : {"degree", "vdim", "edim", "dim", "special", "basis"})
        EXPECT_TRUE(sys.contains(k)) << k;
    EXPECT_EQ(sys["dim"], sys["basis"].size());
}
