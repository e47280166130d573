#pragma once

// [q^{st}-1, (st+s+1)/h, d]_q^h additive codes from the subspaces
//   X_x = <(1, l_j N(x), l_j x) : j = 1..h>,  x in F_{q^{st}}^*,
// of F_q x F_{q^s} x F_{q^{st}}, coordinatised over F_q.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "additive_code.hpp"
#include "arith.hpp"
#include "budget.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "subspace_family.hpp"

namespace addikit {

/// Ambient F_q-dimension 1 + s + st.
inline std::size_t norm_trace_dimension(const TowerContext& ctx) {
    return 1 + static_cast<std::size_t>(ctx.s()) + static_cast<std::size_t>(ctx.s()) * ctx.t();
}

/// Lower bound n - ((q^{st}-1)/(q^s-1)) q^{s-h} on the minimum distance.
inline std::int64_t norm_trace_bound(std::uint64_t q, std::uint64_t s, std::uint64_t t, std::uint64_t h) {
    if (h > s) raise(ErrorCode::InvalidParams, "bound needs h <= s");
    const auto qst = arith::checked_pow(q, s * t);
    const auto qs = arith::checked_pow(q, s);
    const auto qsh = arith::checked_pow(q, s - h);
    if (!qst || !qs || !qsh) raise(ErrorCode::InvalidParams, "bound overflows");
    const std::uint64_t n = *qst - 1;
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(n / (*qs - 1) * *qsh);
}

/// h x h Moore matrix over F_{q^s}, entry (i, j) = l_j^{q^{s-1-i}}.
inline Matrix moore_matrix(const TowerContext& ctx, std::span<const Rep> lambdas) {
    const Field& L = ctx.fqs();
    const std::size_t h = lambdas.size();
    Matrix m(L, h, h);
    for (std::size_t i = 0; i < h; ++i) {
        const std::uint64_t exponent = *arith::checked_pow(ctx.q(), ctx.s() - 1 - i);
        for (std::size_t j = 0; j < h; ++j) m(i, j) = L.pow(lambdas[j], exponent);
    }
    return m;
}

/// l_1..l_h in F_{q^s}. Defaults to the polynomial basis prefix 1, x, ..., x^{h-1};
/// the default is checked for F_q-independence. Every choice must give a
/// nonsingular Moore matrix.
inline Vector choose_lambdas(const TowerContext& ctx, std::optional<Vector> user = std::nullopt) {
    const std::size_t h = ctx.h();
    if (ctx.h() > ctx.s()) raise(ErrorCode::InvalidParams, "need h <= s");
    Vector lambdas;
    if (user) {
        lambdas = *user;
        if (lambdas.size() != h) raise(ErrorCode::InvalidParams, "expected " + std::to_string(h) + " lambdas");
        for (const auto l : lambdas) {
            if (!ctx.fqs().contains(l)) raise(ErrorCode::InvalidParams, "lambda outside " + ctx.fqs().name());
            if (l == 0) raise(ErrorCode::DependentLambdas, "lambda is zero");
        }
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j)
                if (lambdas[i] == lambdas[j]) raise(ErrorCode::DependentLambdas, "repeated lambda " + std::to_string(lambdas[i]));
    } else {
        for (std::uint32_t j = 0; j < h; ++j) lambdas.push_back(ctx.q_to_s().basis(j));
        if (!ctx.q_to_s().independent(lambdas)) raise(ErrorCode::DependentLambdas, "default lambdas are dependent");
    }
    if (det(moore_matrix(ctx, lambdas)) == 0) {
        std::string w;
        for (const auto l : lambdas) w += (w.empty() ? "" : ",") + std::to_string(l);
        raise(ErrorCode::SingularMoore, "Moore matrix of (" + w + ") is singular");
    }
    return lambdas;
}

/// The canonical nonzero theta with sum_j theta_j l_j^{q^{s-1-i}} = 0 for i < h-1
/// (first nonzero entry 1); checks sum_j theta_j l_j^{q^{s-h}} != 0.
inline Vector solve_thetas(const TowerContext& ctx, std::span<const Rep> lambdas) {
    const Matrix moore = moore_matrix(ctx, lambdas);
    const std::size_t h = lambdas.size();
    if (det(moore) == 0) raise(ErrorCode::SingularMoore, "Moore matrix is singular");
    const Field& L = ctx.fqs();
    Matrix system(L, h - 1, h);
    for (std::size_t i = 0; i + 1 < h; ++i)
        for (std::size_t j = 0; j < h; ++j) system(i, j) = moore(i, j);
    const auto kernel = nullspace(system);
    if (kernel.size() != 1) {
        raise(ErrorCode::InternalInconsistency, "theta system has nullity " + std::to_string(kernel.size()));
    }
    Vector theta = normalized(L, kernel.front());
    if (dot(L, moore.row(h - 1), theta) == 0) {
        raise(ErrorCode::InternalInconsistency, "theta annihilates the last Moore row");
    }
    return theta;
}

/// Coordinates over F_q of (a1, a2, a3) in F_q x F_{q^s} x F_{q^{st}}.
inline Vector norm_trace_coordinates(const TowerContext& ctx, Rep a1, Rep a2, Rep a3) {
    Vector v{a1};
    const auto c2 = ctx.q_to_s().coordinates(a2);
    const auto c3 = ctx.q_to_st().coordinates(a3);
    v.insert(v.end(), c2.begin(), c2.end());
    v.insert(v.end(), c3.begin(), c3.end());
    return v;
}

/// Inverse of norm_trace_coordinates.
inline std::tuple<Rep, Rep, Rep> norm_trace_split(const TowerContext& ctx, std::span<const Rep> v) {
    if (v.size() != norm_trace_dimension(ctx)) raise(ErrorCode::DimensionMismatch, "vector length differs from 1+s+st");
    const std::size_t s = ctx.s();
    return {v[0], ctx.q_to_s().combine(v.subspan(1, s)), ctx.q_to_st().combine(v.subspan(1 + s))};
}

/// The F_q-vector b with b . coords(y) = a1 y1 + tr(a2 y2) + Tr(a3 y3), so that
/// the codeword of b vanishes exactly where the trace forms of a vanish.
inline Vector trace_form_to_standard(const TowerContext& ctx, Rep a1, Rep a2, Rep a3) {
    Vector b{a1};
    for (std::uint32_t i = 0; i < ctx.s(); ++i) b.push_back(ctx.tr(ctx.fqs().mul(a2, ctx.q_to_s().basis(i))));
    for (std::uint32_t i = 0; i < ctx.s() * ctx.t(); ++i) b.push_back(ctx.Tr(ctx.fqst().mul(a3, ctx.q_to_st().basis(i))));
    return b;
}

/// x ranges over g^0, g^1, ..., g^{q^{st}-2} for the canonical generator g of F_{q^{st}}.
inline SubspaceFamily build_norm_trace_family(const TowerContext& ctx, std::span<const Rep> lambdas) {
    if (lambdas.size() != ctx.h()) raise(ErrorCode::InvalidParams, "expected h lambdas");
    const Field& big = ctx.fqst();
    const std::size_t dim = norm_trace_dimension(ctx);
    SubspaceFamily family{ctx.fq(), dim, ctx.h(), {}};
    const std::uint64_t n = big.order() - 1;
    family.members.reserve(n);
    for (std::uint64_t e = 0; e < n; ++e) {
        const Rep x = big.exp(e);
        const Rep nx = ctx.norm(x);
        Matrix member(ctx.fq(), ctx.h(), dim);
        for (std::size_t j = 0; j < ctx.h(); ++j) {
            const Rep second = ctx.fqs().mul(lambdas[j], nx);
            const Rep third = big.mul(ctx.s_to_st().embed(lambdas[j]), x);
            const auto g = norm_trace_coordinates(ctx, 1, second, third);
            for (std::size_t c = 0; c < dim; ++c) member(j, c) = g[c];
        }
        if (rank(member) != ctx.h()) {
            raise(ErrorCode::RankDeficientMember, "member for x = g^" + std::to_string(e) + " has rank below h");
        }
        family.members.push_back(std::move(member));
    }
    return family;
}

/// Number of nonzero x with a1 + tr(a2 l_j N(x)) + Tr(a3 l_j x) = 0 for every j,
/// by direct evaluation of the trace forms.
inline std::size_t hyperplane_zero_count(const TowerContext& ctx, std::span<const Rep> lambdas, Rep a1, Rep a2, Rep a3) {
    const Field& Fq = ctx.fq();
    const Field& big = ctx.fqst();
    std::size_t count = 0;
    for (std::uint64_t e = 0; e + 1 < big.order(); ++e) {
        const Rep x = big.exp(e);
        const Rep nx = ctx.norm(x);
        bool all_zero = true;
        for (std::size_t j = 0; j < lambdas.size() && all_zero; ++j) {
            const Rep lhs = Fq.add(Fq.add(a1, ctx.tr(ctx.fqs().mul(a2, ctx.fqs().mul(lambdas[j], nx)))),
                                   ctx.Tr(big.mul(a3, big.mul(ctx.s_to_st().embed(lambdas[j]), x))));
            all_zero = lhs == 0;
        }
        if (all_zero) ++count;
    }
    return count;
}

/// Maximum of hyperplane_zero_count over every nonzero (a1, a2, a3).
inline std::size_t max_hyperplane_zero_count(const TowerContext& ctx, std::span<const Rep> lambdas,
                                             const Budget& budget = {}, unsigned jobs = 1) {
    const auto total = arith::checked_pow(ctx.q(), norm_trace_dimension(ctx));
    if (!total) raise(ErrorCode::BudgetExceeded, "q^k overflows");
    budget.check(*total, "hyperplane count sweep");
    std::vector<std::size_t> best(std::max(1u, jobs), 0);
    detail::parallel_chunks(*total - 1, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto a = affine_vector(ctx.q(), norm_trace_dimension(ctx), i + 1);
            const auto [a1, a2, a3] = norm_trace_split(ctx, a);
            best[w] = std::max(best[w], hyperplane_zero_count(ctx, lambdas, a1, a2, a3));
        }
    });
    return *std::max_element(best.begin(), best.end());
}

struct ConstructionBResult {
    AdditiveCode code;
    SubspaceFamily family;
    Vector lambdas;
    Vector thetas;
    std::int64_t bound_d = 0;
    std::optional<std::size_t> exact_d;

    [[nodiscard]] bool bound_met() const { return !exact_d || static_cast<std::int64_t>(*exact_d) >= bound_d; }
};

struct ConstructionBOptions {
    std::optional<Vector> lambdas;
    bool verify = true;
    Budget budget = {};
    unsigned jobs = 1;
};

/// Builds the code; throws RankDeficientCode if the rows are F_q-dependent.
inline ConstructionBResult construct_b(const TowerContext& ctx, const ConstructionBOptions& options = {}) {
    if (ctx.h() > ctx.s() || ctx.t() < 2) raise(ErrorCode::InvalidParams, "need h <= s and t >= 2");
    Vector lambdas = choose_lambdas(ctx, options.lambdas);
    Vector thetas = solve_thetas(ctx, lambdas);
    SubspaceFamily family = build_norm_trace_family(ctx, lambdas);
    AdditiveCode code = additive_code_from_family(family, ctx.q_to_h(), ctx.alphabet_basis());
    ConstructionBResult result{std::move(code),   std::move(family), std::move(lambdas), std::move(thetas),
                               norm_trace_bound(ctx.q(), ctx.s(), ctx.t(), ctx.h()), std::nullopt};
    if (options.verify) {
        try {
            result.exact_d = result.code.min_distance(options.budget, options.jobs);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
        }
    }
    return result;
}

}  // namespace addikit
