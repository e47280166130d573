#pragma once

// Additive codes from a linear code and a partial semifield: column i of the
// new generator is sum_j e_j A_j x_i, where x_i is column i of G.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "additive_code.hpp"
#include "bounds.hpp"
#include "budget.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "subspace_family.hpp"

namespace addikit {

struct SemifieldCheck {
    bool ok = true;
    Vector witness;  // lambda with singular sum_j lambda_j A_j, when !ok
};

/// Checks every nonzero combination of the matrices, one per projective class.
inline SemifieldCheck verify_partial_semifield(const std::vector<Matrix>& matrices) {
    if (matrices.empty()) raise(ErrorCode::DimensionMismatch, "empty matrix set");
    const Field& F = matrices.front().field();
    const std::size_t k = matrices.front().rows();
    for (const auto& a : matrices) {
        if (!(a.field() == F)) raise(ErrorCode::FieldMismatch, "matrices over different fields");
        if (a.rows() != k || a.cols() != k) raise(ErrorCode::DimensionMismatch, "matrices must all be k x k");
    }
    if (matrices.size() > k) raise(ErrorCode::DimensionMismatch, "h exceeds k");
    const std::size_t h = matrices.size();
    const std::uint64_t classes = projective_count(F.order(), h);
    for (std::uint64_t i = 0; i < classes; ++i) {
        const auto lambda = projective_vector(F.order(), h, i);
        Matrix sum(F, k, k);
        for (std::size_t j = 0; j < h; ++j)
            if (lambda[j] != 0) sum = sum + scaled(matrices[j], lambda[j]);
        if (!is_nonsingular(sum)) return {false, lambda};
    }
    return {};
}

/// h matrices of size k x k over F_q whose nonzero combinations are all nonsingular.
class PartialSemifield {
   public:
    /// Throws InvalidParams (with the singular combination) if the property fails.
    explicit PartialSemifield(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
        const auto check = verify_partial_semifield(matrices_);
        if (!check.ok) {
            std::string w;
            for (const auto x : check.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
            raise(ErrorCode::InvalidParams, "not a partial semifield, singular combination (" + w + ")");
        }
    }

    [[nodiscard]] const Field& field() const noexcept { return matrices_.front().field(); }
    [[nodiscard]] std::size_t k() const noexcept { return matrices_.front().rows(); }
    [[nodiscard]] std::size_t h() const noexcept { return matrices_.size(); }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return matrices_; }

   private:
    std::vector<Matrix> matrices_;
};

/// A_j = multiplication by x^{j-1} on F_{q^k}, written in the polynomial basis
/// (column c holds the coordinates of x^{j-1} * x^c).
inline PartialSemifield desarguesian_partial_semifield(const Field& fq, std::size_t k, std::size_t h) {
    if (h < 1 || k < 1 || h > k) raise(ErrorCode::InvalidParams, "need 1 <= h <= k");
    const Extension ext(fq, Field::create(fq.characteristic(), fq.degree() * static_cast<std::uint32_t>(k)));
    std::vector<Matrix> matrices;
    for (std::size_t j = 0; j < h; ++j) {
        Matrix a(fq, k, k);
        for (std::size_t c = 0; c < k; ++c) {
            const auto coords = ext.coordinates(ext.field().mul(ext.basis(static_cast<std::uint32_t>(j)),
                                                                ext.basis(static_cast<std::uint32_t>(c))));
            for (std::size_t r = 0; r < k; ++r) a(r, c) = coords[r];
        }
        matrices.push_back(std::move(a));
    }
    return PartialSemifield(std::move(matrices));
}

enum class GuaranteeKind {
    ExactGhw,     // d_h(C) by subspace enumeration
    GriesmerGhw,  // sum_{i<h} ceil(d/q^i), d by enumeration
    Trivial,      // d_h >= h, nothing else was within budget
};

inline std::string guarantee_name(GuaranteeKind kind) {
    switch (kind) {
        case GuaranteeKind::ExactGhw: return "exact-ghw";
        case GuaranteeKind::GriesmerGhw: return "griesmer-ghw";
        case GuaranteeKind::Trivial: return "trivial";
    }
    return "unknown";
}

struct ConstructionAResult {
    AdditiveCode code;
    LinearCode source;
    PartialSemifield semifield;
    std::size_t guaranteed_d = 0;
    GuaranteeKind guarantee = GuaranteeKind::ExactGhw;
    std::optional<std::size_t> actual_d;  // brute force, when within budget

    /// False only if the brute-forced distance falls below the guarantee.
    [[nodiscard]] bool bound_met() const { return !actual_d || *actual_d >= guaranteed_d; }
};

/// Members <A_1 x_i, ..., A_h x_i> for every column x_i of G.
inline SubspaceFamily semifield_family(const LinearCode& code, const PartialSemifield& semifield) {
    SubspaceFamily family{code.field(), code.k(), semifield.h(), {}};
    for (std::size_t i = 0; i < code.n(); ++i) {
        const Vector& x = code.columns()[i];
        if (weight(x) == 0) raise(ErrorCode::ZeroColumn, "column " + std::to_string(i) + " is zero");
        Matrix member(code.field(), semifield.h(), code.k());
        for (std::size_t j = 0; j < semifield.h(); ++j) {
            const auto g = mat_vec(semifield.matrices()[j], x);
            for (std::size_t r = 0; r < code.k(); ++r) member(j, r) = g[r];
        }
        family.members.push_back(std::move(member));
    }
    return family;
}

namespace detail {

inline std::pair<std::size_t, GuaranteeKind> semifield_guarantee(const LinearCode& code, std::size_t h,
                                                                 const Budget& budget, unsigned jobs) {
    try {
        return {ghw(code, h, budget, jobs), GuaranteeKind::ExactGhw};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    try {
        return {ghw_lower_bound(h, min_distance(code, budget, jobs), code.q()), GuaranteeKind::GriesmerGhw};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    return {h, GuaranteeKind::Trivial};
}

inline void check_compatible(const LinearCode& code, const PartialSemifield& semifield, const Extension& q_to_h) {
    if (semifield.k() != code.k()) raise(ErrorCode::DimensionMismatch, "semifield k differs from code k");
    if (!(semifield.field() == code.field())) raise(ErrorCode::FieldMismatch, "semifield and code over different fields");
    if (!(q_to_h.base() == code.field())) raise(ErrorCode::FieldMismatch, "extension base differs from code field");
    if (q_to_h.degree() != semifield.h()) raise(ErrorCode::DimensionMismatch, "extension degree differs from h");
}

inline Vector default_basis(const Extension& q_to_h) {
    Vector basis;
    for (std::uint32_t j = 0; j < q_to_h.degree(); ++j) basis.push_back(q_to_h.basis(j));
    return basis;
}

}  // namespace detail

struct ConstructionAOptions {
    Vector basis;            // e_1..e_h; empty means the polynomial basis
    bool verify = true;      // brute-force the actual distance when within budget
    Budget budget = {};
    unsigned jobs = 1;
};

inline ConstructionAResult construct_a(const LinearCode& code, const PartialSemifield& semifield, const Extension& q_to_h,
                                       const ConstructionAOptions& options = {}) {
    detail::check_compatible(code, semifield, q_to_h);
    const Vector basis = options.basis.empty() ? detail::default_basis(q_to_h) : options.basis;
    if (basis.size() != semifield.h() || !q_to_h.independent(basis)) {
        raise(ErrorCode::InvalidParams, "alphabet basis must be h F_q-independent elements");
    }
    AdditiveCode additive = additive_code_from_family(semifield_family(code, semifield), q_to_h, basis);
    const auto [guaranteed, kind] = detail::semifield_guarantee(code, semifield.h(), options.budget, options.jobs);
    ConstructionAResult result{std::move(additive), code, semifield, guaranteed, kind, std::nullopt};
    if (options.verify) {
        try {
            result.actual_d = result.code.min_distance(options.budget, options.jobs);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
        }
    }
    return result;
}

/// Construction A on the generator BG instead of G. The guarantee is d_h of the
/// original code (a code invariant); the brute-forced distance may differ.
inline ConstructionAResult construct_a_with_basis_change(const LinearCode& code, const PartialSemifield& semifield,
                                                         const Extension& q_to_h, const Matrix& change,
                                                         const ConstructionAOptions& options = {}) {
    if (change.rows() != code.k() || change.cols() != code.k()) {
        raise(ErrorCode::DimensionMismatch, "basis change must be k x k");
    }
    if (!is_nonsingular(change)) raise(ErrorCode::SingularMatrix, "basis change matrix is singular");
    return construct_a(LinearCode(change * code.generator()), semifield, q_to_h, options);
}

}  // namespace addikit
