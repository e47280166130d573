#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include <addikit/linear_code.hpp>

#include "oracles.hpp"

using addikit::Field;
using addikit::LinearCode;
using addikit::Matrix;
using addikit::Rep;
using addikit::Subspace;
using addikit::Vector;
namespace codes = addikit::codes;

namespace {

std::vector<oracle::Vec> rows_of(const LinearCode& c) {
    std::vector<oracle::Vec> out;
    for (const auto& r : c.generator().to_rows()) out.emplace_back(r.begin(), r.end());
    return out;
}

LinearCode ternary_84() {
    const Field F3 = Field::create(3, 1);
    return LinearCode(Matrix::from_rows(F3, {{1, 0, 0, 0, 1, 1, 2, 0},
                                             {0, 1, 0, 0, 2, 1, 0, 1},
                                             {0, 0, 1, 0, 1, 0, 1, 1},
                                             {0, 0, 0, 1, 0, 2, 1, 2}}));
}

}  // namespace

TEST(LinearCode, HammingAndSimplexHierarchies) {
    EXPECT_EQ(addikit::ghw_hierarchy(codes::hamming74()), (std::vector<std::size_t>{3, 5, 6, 7}));
    EXPECT_EQ(addikit::ghw_hierarchy(codes::simplex73()), (std::vector<std::size_t>{4, 6, 7}));
}

TEST(LinearCode, GhwMatchesSupportEnumeration) {
    for (const auto& code : {codes::hamming74(), codes::simplex73()}) {
        for (std::size_t j = 1; j <= code.k(); ++j) {
            EXPECT_EQ(addikit::ghw(code, j), oracle::ghw_binary(rows_of(code), code.n(), j)) << "j=" << j;
        }
    }
}

TEST(LinearCode, MinDistanceMatchesSpanEnumeration) {
    for (const auto& code : {codes::hamming74(), codes::simplex73(), ternary_84()}) {
        const auto words = oracle::span_prime(rows_of(code), code.field().characteristic(), code.n());
        std::size_t best = code.n();
        for (const auto& w : words)
            if (oracle::weight(w) > 0) best = std::min(best, oracle::weight(w));
        EXPECT_EQ(addikit::min_distance(code), best);
        EXPECT_EQ(addikit::ghw(code, 1), best);
    }
}

TEST(LinearCode, WeiMonotonicityAndEndpoint) {
    for (const auto& code : {codes::hamming74(), codes::simplex73(), ternary_84()}) {
        const auto d = addikit::ghw_hierarchy(code);
        for (std::size_t j = 1; j < d.size(); ++j) EXPECT_LT(d[j - 1], d[j]);
        EXPECT_LE(d.back(), code.n());
    }
}

TEST(LinearCode, ParallelGhwIsDeterministic) {
    const auto code = ternary_84();
    for (std::size_t j = 1; j <= code.k(); ++j) EXPECT_EQ(addikit::ghw(code, j, {}, 3), addikit::ghw(code, j, {}, 1));
    EXPECT_EQ(addikit::min_distance(code, {}, 4), addikit::min_distance(code));
}

TEST(LinearCode, WeightEqualsLengthMinusHyperplaneCount) {
    const auto code = ternary_84();
    for (std::uint64_t i = 1; i < 81; ++i) {
        const Vector v = addikit::affine_vector(3, 4, i);
        const auto V = Subspace::from_generators(Matrix::from_rows(code.field(), {v}));
        EXPECT_EQ(addikit::weight(code.encode(v)), code.n() - code.perp_count(V));
    }
}

TEST(LinearCode, MonomialEquivalenceKeepsHierarchy) {
    const auto code = ternary_84();
    const Field& F = code.field();
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::size_t> perm(code.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix g(F, code.k(), code.n());
        for (std::size_t c = 0; c < code.n(); ++c) {
            const Rep scale = 1 + static_cast<Rep>(rng() % 2);
            for (std::size_t r = 0; r < code.k(); ++r) g(r, c) = F.mul(scale, code.generator()(r, perm[c]));
        }
        EXPECT_EQ(addikit::ghw_hierarchy(LinearCode(g)), addikit::ghw_hierarchy(code));
    }
}

TEST(LinearCode, ColumnsAsNormalisedPoints) {
    const Field F3 = Field::create(3, 1);
    const LinearCode code(Matrix::from_rows(F3, {{0, 1, 0}, {2, 0, 1}, {1, 0, 0}}));
    const auto pts = addikit::columns_as_points(code);
    EXPECT_EQ(pts.points[0], (Vector{0, 1, 2}));
    EXPECT_EQ(pts.points[1], (Vector{1, 0, 0}));
    const LinearCode with_zero(Matrix::from_rows(F3, {{1, 0}}));
    EXPECT_THROW((void)addikit::columns_as_points(with_zero), addikit::Error);
}

TEST(LinearCode, ProjectiveEnumerationCoversEachPointOnce) {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const Field F = Field::with_order(q);
        std::set<Vector> seen;
        const auto count = addikit::projective_count(q, 3);
        for (std::uint64_t i = 0; i < count; ++i) {
            const auto v = addikit::projective_vector(q, 3, i);
            EXPECT_EQ(addikit::normalized(F, v), v);
            seen.insert(v);
        }
        EXPECT_EQ(seen.size(), count);
        EXPECT_EQ(count, q * q + q + 1);
    }
}

TEST(LinearCode, SubspaceCountIsGaussianBinomial) {
    const Field F = Field::create(3, 1);
    for (std::size_t j = 0; j <= 4; ++j) {
        std::uint64_t count = 0;
        addikit::for_each_subspace(F, 4, j, [&](const Matrix& b) {
            ++count;
            EXPECT_EQ(addikit::rank(b), j);
        });
        EXPECT_EQ(count, addikit::arith::gaussian_binomial(3, 4, j));
    }
}

TEST(LinearCode, WeightDistributionSums) {
    const auto dist = addikit::weight_distribution(codes::hamming74());
    EXPECT_EQ(dist, (std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1}));
}

TEST(LinearCode, Errors) {
    const Field F2 = Field::create(2, 1);
    EXPECT_THROW(LinearCode(Matrix::from_rows(F2, {{1, 1}, {1, 1}})), addikit::Error);
    EXPECT_THROW((void)addikit::ghw(codes::hamming74(), 5), addikit::Error);
    addikit::Budget tiny;
    tiny.max_enumeration = 3;
    EXPECT_THROW((void)addikit::min_distance(codes::hamming74(), tiny), addikit::Error);
}
