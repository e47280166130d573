#pragma once

// Linear [n,k,d]_q codes: weights, supports, exhaustive minimum distance and
// generalised Hamming weights through the column point set.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "budget.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "parallel.hpp"

namespace addikit {

/// Number of nonzero coordinates. Rep 0 is the zero of every field.
inline std::size_t weight(std::span<const Rep> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Rep x) { return x != 0; }));
}

/// Coordinates where at least one of the vectors is nonzero, ascending.
inline std::vector<std::size_t> support(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return {};
    const std::size_t n = vectors.front().size();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& v : vectors) {
            if (v.size() != n) raise(ErrorCode::DimensionMismatch, "vectors of different lengths");
            if (v[i] != 0) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

/// (q^k - 1)/(q - 1): one representative per 1-dimensional subspace of F_q^k.
inline std::uint64_t projective_count(std::uint64_t q, std::size_t k) {
    const auto total = arith::checked_pow(q, k);
    if (!total) return UINT64_MAX;
    return (*total - 1) / (q - 1);
}

/// The index-th projective representative of F_q^k (first nonzero entry 1).
/// Leading position ascends; within a block the tail is read as base-q digits.
inline Vector projective_vector(std::uint64_t q, std::size_t k, std::uint64_t index) {
    Vector v(k, 0);
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::uint64_t block = *arith::checked_pow(q, k - 1 - lead);
        if (index < block) {
            v[lead] = 1;
            for (std::size_t i = k; i-- > lead + 1;) {
                v[i] = static_cast<Rep>(index % q);
                index /= q;
            }
            return v;
        }
        index -= block;
    }
    raise(ErrorCode::IndexOutOfRange, "projective index past the end");
}

/// The index-th vector of F_q^k in little-endian base-q order.
inline Vector affine_vector(std::uint64_t q, std::size_t k, std::uint64_t index) {
    Vector v(k);
    for (auto& x : v) {
        x = static_cast<Rep>(index % q);
        index /= q;
    }
    return v;
}

/// Calls visit(V) for every j-dimensional subspace V of F^k, V given by its RREF
/// basis (j x k). Pivot sets run lexicographically, free entries in odometer order.
template <typename Visit>
void for_each_subspace(const Field& F, std::size_t k, std::size_t j, Visit&& visit) {
    if (j > k) raise(ErrorCode::InvalidDimension, "subspace dimension exceeds ambient dimension");
    const Rep q = F.order();
    std::vector<std::size_t> pivots(j);
    for (std::size_t i = 0; i < j; ++i) pivots[i] = i;
    while (true) {
        std::vector<bool> is_pivot(k, false);
        for (const auto c : pivots) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < j; ++r)
            for (std::size_t c = pivots[r] + 1; c < k; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);

        Matrix basis(F, j, k);
        for (std::size_t r = 0; r < j; ++r) basis(r, pivots[r]) = 1;
        std::vector<Rep> odometer(free.size(), 0);
        while (true) {
            visit(static_cast<const Matrix&>(basis));
            std::size_t pos = 0;
            while (pos < free.size()) {
                auto [r, c] = free[pos];
                if (++odometer[pos] < q) {
                    basis(r, c) = odometer[pos];
                    break;
                }
                odometer[pos] = 0;
                basis(r, c) = 0;
                ++pos;
            }
            if (pos == free.size()) break;
        }

        // Next j-combination of {0..k-1}.
        std::size_t i = j;
        while (i > 0 && pivots[i - 1] == k - j + i - 1) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t r = i; r < j; ++r) pivots[r] = pivots[r - 1] + 1;
    }
}

/// Columns of a generator matrix as projective points, normalised so the
/// first nonzero coordinate is 1. Repeated points are kept.
struct ProjectivePointSet {
    Field field;
    std::size_t dimension = 0;
    std::vector<Vector> points;
};

/// A subspace of F^k stored by its canonical RREF basis.
class Subspace {
   public:
    static Subspace from_generators(const Matrix& generators) {
        Subspace s;
        Matrix r = rref(generators);
        const std::size_t rk = rank(generators);
        s.basis_ = Matrix(generators.field(), rk, generators.cols());
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t c = 0; c < generators.cols(); ++c) s.basis_(i, c) = r(i, c);
        return s;
    }

    [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_.rows(); }

    /// x lies in the orthogonal complement iff every basis row is orthogonal to x.
    [[nodiscard]] bool perp_contains(std::span<const Rep> x) const {
        for (std::size_t r = 0; r < basis_.rows(); ++r)
            if (dot(basis_.field(), basis_.row(r), x) != 0) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

   private:
    Matrix basis_;
};

class LinearCode {
   public:
    /// Throws RankDeficientCode unless G has full row rank, InvalidParams if n = 0.
    explicit LinearCode(Matrix generator) : generator_(std::move(generator)) {
        if (generator_.cols() == 0 || generator_.rows() == 0) raise(ErrorCode::InvalidParams, "empty generator matrix");
        if (rank(generator_) != generator_.rows()) {
            raise(ErrorCode::RankDeficientCode, "generator rows are linearly dependent");
        }
        columns_.reserve(generator_.cols());
        for (std::size_t c = 0; c < generator_.cols(); ++c) columns_.push_back(generator_.column(c));
    }

    [[nodiscard]] const Field& field() const noexcept { return generator_.field(); }
    [[nodiscard]] const Matrix& generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
    [[nodiscard]] std::size_t n() const noexcept { return generator_.cols(); }
    [[nodiscard]] std::uint64_t q() const noexcept { return field().order(); }
    [[nodiscard]] const std::vector<Vector>& columns() const noexcept { return columns_; }

    [[nodiscard]] Vector encode(std::span<const Rep> v) const { return vec_mul(v, generator_); }

    /// |V^perp ∩ X| counted with multiplicity over the columns of G.
    [[nodiscard]] std::size_t perp_count(const Subspace& v) const {
        std::size_t count = 0;
        for (const auto& x : columns_)
            if (v.perp_contains(x)) ++count;
        return count;
    }

   private:
    Matrix generator_;
    std::vector<Vector> columns_;
};

inline ProjectivePointSet columns_as_points(const LinearCode& code) {
    ProjectivePointSet set{code.field(), code.k(), {}};
    for (std::size_t c = 0; c < code.n(); ++c) {
        const Vector& x = code.columns()[c];
        if (weight(x) == 0) raise(ErrorCode::ZeroColumn, "column " + std::to_string(c) + " is zero");
        set.points.push_back(normalized(code.field(), x));
    }
    return set;
}

/// Minimum weight over nonzero codewords, one representative per scalar class.
inline std::size_t min_distance(const LinearCode& code, const Budget& budget = {}, unsigned jobs = 1) {
    const std::uint64_t total = projective_count(code.q(), code.k());
    budget.check(total, "minimum distance enumeration");
    std::vector<std::size_t> best(std::max(1u, jobs), code.n());
    detail::parallel_chunks(total, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto v = projective_vector(code.q(), code.k(), i);
            best[w] = std::min(best[w], weight(code.encode(v)));
        }
    });
    return *std::min_element(best.begin(), best.end());
}

/// A_0..A_n over all q^k codewords.
inline std::vector<std::uint64_t> weight_distribution(const LinearCode& code, const Budget& budget = {}) {
    const auto total = arith::checked_pow(code.q(), code.k());
    if (!total) raise(ErrorCode::BudgetExceeded, "q^k overflows");
    budget.check(*total, "weight distribution enumeration");
    std::vector<std::uint64_t> dist(code.n() + 1, 0);
    for (std::uint64_t i = 0; i < *total; ++i) ++dist[weight(code.encode(affine_vector(code.q(), code.k(), i)))];
    return dist;
}

/// d_j(C) = n - max |V^perp ∩ X| over j-dimensional V, by exhaustive enumeration.
inline std::size_t ghw(const LinearCode& code, std::size_t j, const Budget& budget = {}, unsigned jobs = 1) {
    if (j < 1 || j > code.k()) {
        raise(ErrorCode::InvalidDimension, "ghw index " + std::to_string(j) + " outside 1.." + std::to_string(code.k()));
    }
    budget.check(arith::gaussian_binomial(code.q(), code.k(), j), "subspace enumeration for d_" + std::to_string(j));
    jobs = std::max(1u, jobs);
    std::vector<std::size_t> best(jobs, 0);
    detail::parallel_chunks(jobs, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (std::uint64_t w = begin; w < end; ++w) {
            std::uint64_t counter = 0;
            for_each_subspace(code.field(), code.k(), j, [&](const Matrix& basis) {
                if (counter++ % jobs != w) return;
                std::size_t hits = 0;
                for (const auto& x : code.columns()) {
                    bool inside = true;
                    for (std::size_t r = 0; r < basis.rows() && inside; ++r)
                        inside = dot(code.field(), basis.row(r), x) == 0;
                    if (inside) ++hits;
                }
                best[w] = std::max(best[w], hits);
            });
        }
    });
    return code.n() - *std::max_element(best.begin(), best.end());
}

/// d_1..d_k.
inline std::vector<std::size_t> ghw_hierarchy(const LinearCode& code, const Budget& budget = {}, unsigned jobs = 1) {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= code.k(); ++j) out.push_back(ghw(code, j, budget, jobs));
    return out;
}

namespace codes {

/// Binary [7,4,3] Hamming code, systematic form.
inline LinearCode hamming74() {
    const Field F2 = Field::create(2, 1);
    return LinearCode(Matrix::from_rows(F2, {{1, 0, 0, 0, 1, 1, 0},
                                             {0, 1, 0, 0, 1, 0, 1},
                                             {0, 0, 1, 0, 0, 1, 1},
                                             {0, 0, 0, 1, 1, 1, 1}}));
}

/// Binary [7,3,4] simplex code: columns are the nonzero vectors of F_2^3.
inline LinearCode simplex73() {
    const Field F2 = Field::create(2, 1);
    return LinearCode(Matrix::from_rows(F2, {{1, 0, 0, 1, 1, 0, 1},
                                             {0, 1, 0, 1, 0, 1, 1},
                                             {0, 0, 1, 0, 1, 1, 1}}));
}

inline LinearCode identity(const Field& F, std::size_t k) { return LinearCode(Matrix::identity(F, k)); }

}  // namespace codes

}  // namespace addikit
