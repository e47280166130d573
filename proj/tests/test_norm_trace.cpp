#include <gtest/gtest.h>

#include <array>
#include <numeric>
#include <random>

#include <addikit/norm_trace.hpp>

#include "oracles.hpp"

using addikit::ConstructionBOptions;
using addikit::Rep;
using addikit::TowerContext;
using addikit::Vector;

namespace {

const std::vector<std::array<std::uint32_t, 4>> kGrid = {{2, 2, 2, 1}, {2, 2, 2, 2}, {2, 3, 2, 2}, {2, 3, 2, 3}, {3, 2, 2, 2}};

TowerContext ctx_of(const std::array<std::uint32_t, 4>& g) { return TowerContext::for_q(g[0], g[1], g[2], g[3]); }

}  // namespace

TEST(NormTrace, BoundValues) {
    EXPECT_EQ(addikit::norm_trace_bound(2, 2, 2, 1), 5);
    EXPECT_EQ(addikit::norm_trace_bound(2, 2, 2, 2), 10);
    EXPECT_EQ(addikit::norm_trace_bound(2, 3, 2, 2), 45);
    EXPECT_EQ(addikit::norm_trace_bound(2, 3, 2, 3), 54);
    EXPECT_EQ(addikit::norm_trace_bound(3, 2, 2, 2), 70);
    EXPECT_THROW((void)addikit::norm_trace_bound(2, 2, 2, 3), addikit::Error);
}

TEST(NormTrace, ThetasSolveTheMooreSystem) {
    for (const auto& g : kGrid) {
        const auto ctx = ctx_of(g);
        if (ctx.h() < 2) continue;
        const Vector lambdas = addikit::choose_lambdas(ctx);
        const Vector theta = addikit::solve_thetas(ctx, lambdas);
        const auto& L = ctx.fqs();
        for (std::uint32_t i = 0; i < ctx.h(); ++i) {
            const std::uint64_t e = oracle::ipow(ctx.q(), ctx.s() - 1 - i);
            Rep sum = 0;
            for (std::size_t j = 0; j < ctx.h(); ++j) sum = L.add(sum, L.mul(theta[j], L.pow(lambdas[j], e)));
            if (i + 1 < ctx.h()) {
                EXPECT_EQ(sum, 0u);
            } else {
                EXPECT_NE(sum, 0u);
            }
        }
    }
}

TEST(NormTrace, MembersHaveRankHAndSpanTheAmbientSpace) {
    for (const auto& g : kGrid) {
        const auto ctx = ctx_of(g);
        const auto family = addikit::build_norm_trace_family(ctx, addikit::choose_lambdas(ctx));
        EXPECT_EQ(family.size(), oracle::ipow(ctx.q(), ctx.s() * ctx.t()) - 1);
        for (const auto& m : family.members) ASSERT_EQ(addikit::rank(m), ctx.h());
        std::vector<std::size_t> all(family.size());
        std::iota(all.begin(), all.end(), 0);
        EXPECT_EQ(addikit::rank(family.stacked(all)), addikit::norm_trace_dimension(ctx));
    }
}

TEST(NormTrace, TraceFormDuality) {
    std::mt19937_64 rng(31);
    for (const auto& g : kGrid) {
        const auto ctx = ctx_of(g);
        const auto& Fq = ctx.fq();
        for (int trial = 0; trial < 40; ++trial) {
            const Rep a1 = rng() % ctx.q(), a2 = rng() % ctx.fqs().order(), a3 = rng() % ctx.fqst().order();
            const Rep y1 = rng() % ctx.q(), y2 = rng() % ctx.fqs().order(), y3 = rng() % ctx.fqst().order();
            const Vector b = addikit::trace_form_to_standard(ctx, a1, a2, a3);
            const Vector y = addikit::norm_trace_coordinates(ctx, y1, y2, y3);
            const Rep expected = Fq.add(Fq.add(Fq.mul(a1, y1), ctx.tr(ctx.fqs().mul(a2, y2))), ctx.Tr(ctx.fqst().mul(a3, y3)));
            EXPECT_EQ(addikit::dot(Fq, b, y), expected);
            const auto [s1, s2, s3] = addikit::norm_trace_split(ctx, y);
            EXPECT_EQ(s1, y1);
            EXPECT_EQ(s2, y2);
            EXPECT_EQ(s3, y3);
        }
    }
}

TEST(NormTrace, CodewordWeightIsLengthMinusZeroCount) {
    std::mt19937_64 rng(37);
    for (const auto& g : {kGrid[1], kGrid[2], kGrid[4]}) {
        const auto ctx = ctx_of(g);
        const auto r = addikit::construct_b(ctx, {.verify = false});
        for (int trial = 0; trial < 25; ++trial) {
            const Rep a1 = rng() % ctx.q(), a2 = rng() % ctx.fqs().order(), a3 = rng() % ctx.fqst().order();
            if (a1 == 0 && a2 == 0 && a3 == 0) continue;
            const Vector b = addikit::trace_form_to_standard(ctx, a1, a2, a3);
            EXPECT_EQ(addikit::weight(r.code.codeword(b)),
                      r.code.n() - addikit::hyperplane_zero_count(ctx, r.lambdas, a1, a2, a3));
        }
    }
}

TEST(NormTrace, ZeroCountsRespectTheCap) {
    const auto small = TowerContext::for_q(2, 2, 2, 2);
    EXPECT_EQ(addikit::max_hyperplane_zero_count(small, addikit::choose_lambdas(small)), 5u);
    const auto large = TowerContext::for_q(2, 3, 2, 2);
    const auto lambdas = addikit::choose_lambdas(large);
    EXPECT_LE(addikit::max_hyperplane_zero_count(large, lambdas, {}, 2), 18u);
    EXPECT_EQ(addikit::max_hyperplane_zero_count(large, lambdas, {}, 2),
              addikit::max_hyperplane_zero_count(large, lambdas, {}, 1));
}

TEST(NormTrace, ConstructionMeetsBoundOnGrid) {
    for (const auto& g : kGrid) {
        const auto ctx = ctx_of(g);
        const auto r = addikit::construct_b(ctx);
        ASSERT_TRUE(r.exact_d.has_value());
        EXPECT_GE(static_cast<std::int64_t>(*r.exact_d), r.bound_d);
        EXPECT_EQ(r.code.k(), addikit::norm_trace_dimension(ctx));
        EXPECT_EQ(r.code.n(), oracle::ipow(ctx.q(), ctx.s() * ctx.t()) - 1);
    }
}

TEST(NormTrace, LambdaValidation) {
    const auto ctx = TowerContext::for_q(2, 3, 2, 3);
    EXPECT_THROW((void)addikit::choose_lambdas(ctx, Vector{1, 1, 2}), addikit::Error);
    EXPECT_THROW((void)addikit::choose_lambdas(ctx, Vector{1, 2}), addikit::Error);
    try {
        (void)addikit::choose_lambdas(ctx, Vector{1, 2, 3});  // 3 = 1 + 2
        FAIL();
    } catch (const addikit::Error& e) {
        EXPECT_EQ(e.code(), addikit::ErrorCode::SingularMoore);
    }
    EXPECT_EQ(addikit::choose_lambdas(ctx, Vector{1, 2, 4}), (Vector{1, 2, 4}));
    const auto custom = addikit::construct_b(TowerContext::for_q(2, 3, 2, 2), {.lambdas = Vector{3, 5}});
    ASSERT_TRUE(custom.exact_d.has_value());
    EXPECT_GE(*custom.exact_d, 45u);
}

TEST(NormTrace, ParameterErrors) {
    EXPECT_THROW((void)addikit::construct_b(TowerContext::for_q(2, 2, 2, 3)), addikit::Error);
    EXPECT_THROW((void)addikit::construct_b(TowerContext::for_q(2, 2, 1, 2)), addikit::Error);
}
