#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <functional>

#include <addikit/addikit.hpp>
#include <addikit/io.hpp>

using addikit::Field;
using addikit::Matrix;
using addikit::io::json;

namespace {

addikit::ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const addikit::Error& e) {
        return e.code();
    }
    return addikit::ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(Io, FieldRoundTrip) {
    const Field F = Field::create(3, 2);
    const json j = addikit::io::field_to_json(F);
    EXPECT_EQ(j.at("modulus"), json({2, 1, 1}));
    EXPECT_EQ(addikit::io::field_from_json(j), F);
    EXPECT_EQ(addikit::io::field_from_json(json{{"p", 2}, {"m", 3}}), Field::create(2, 3));
}

TEST(Io, NonCanonicalModulusIsRejected) {
    const json j = {{"p", 2}, {"m", 3}, {"modulus", {1, 1, 0, 1}}};
    EXPECT_EQ(code_of([&] { (void)addikit::io::field_from_json(j); }), addikit::ErrorCode::ParseError);
}

TEST(Io, MatrixAndCodesRoundTrip) {
    const auto code = addikit::codes::hamming74();
    const auto back = addikit::io::linear_code_from_json(addikit::io::linear_code_to_json(code));
    EXPECT_EQ(back.generator(), code.generator());

    const Field F4 = Field::create(2, 2);
    const Matrix m = Matrix::from_rows(F4, {{1, 2, 3}, {0, 3, 2}});
    EXPECT_EQ(addikit::io::matrix_from_json(F4, addikit::io::matrix_to_json(m)), m);

    const auto r = addikit::construct_b(addikit::TowerContext::for_q(2, 2, 2, 2), {.verify = false});
    const auto additive = addikit::io::additive_code_from_json(addikit::io::additive_code_to_json(r.code));
    EXPECT_EQ(additive.generator(), r.code.generator());
    EXPECT_EQ(additive.h(), 2u);

    const auto sf = addikit::desarguesian_partial_semifield(code.field(), 4, 2);
    const auto sf_back = addikit::io::semifield_from_json(addikit::io::semifield_to_json(sf));
    EXPECT_EQ(sf_back.matrices(), sf.matrices());
}

TEST(Io, MalformedInputsRaiseParseError) {
    const json bad_dims = {{"q", {{"p", 2}, {"m", 1}}}, {"k", 2}, {"n", 3}, {"rows", {{1, 0, 1}}}};
    EXPECT_EQ(code_of([&] { (void)addikit::io::linear_code_from_json(bad_dims); }), addikit::ErrorCode::ParseError);
    const json missing = {{"k", 1}};
    EXPECT_EQ(code_of([&] { (void)addikit::io::linear_code_from_json(missing); }), addikit::ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { (void)addikit::io::read_json_file("/nonexistent/addikit.json"); }), addikit::ErrorCode::ParseError);

    const std::string path = ::testing::TempDir() + "addikit_bad.json";
    std::ofstream(path) << "{ not json";
    EXPECT_EQ(code_of([&] { (void)addikit::io::read_json_file(path); }), addikit::ErrorCode::ParseError);
    std::remove(path.c_str());
}

TEST(Io, VerdictReport) {
    const json j = addikit::io::verdict_to_json(addikit::additive_griesmer_check(15, 7, 2, 2, 12));
    EXPECT_EQ(j.at("f"), "24/7");
    EXPECT_EQ(j.at("m"), 3);
    EXPECT_EQ(j.at("r_0"), 1);
    EXPECT_EQ(j.at("ceil_d_over_f"), 4);
    EXPECT_EQ(j.at("rhs"), 17);
    EXPECT_EQ(j.at("verdict"), "infeasible");
    EXPECT_TRUE(addikit::io::verdict_to_json(addikit::additive_griesmer_check(4, 2, 2, 2, 1)).at("f").is_null());
}

TEST(Io, ParamsReportAndCsv) {
    const json p = addikit::io::params_report({63, 10, 2, 2, 45}, 45);
    EXPECT_EQ(p.at("dim"), "5");
    EXPECT_EQ(p.at("bound_met"), true);
    EXPECT_EQ(addikit::io::ghw_csv({3, 5}), "j,d_j\n1,3\n2,5\n");
    EXPECT_EQ(addikit::io::weight_csv({1, 0, 2}), "w,A_w\n0,1\n1,0\n2,2\n");
}
