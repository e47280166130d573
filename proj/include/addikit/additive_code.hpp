#pragma once

// Additive codes over F_{q^h} that are linear over F_q, stored as the k x n
// matrix over F_{q^h} whose F_q-row-span is the code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "parallel.hpp"

namespace addikit {

/// "k/h" in lowest terms ("5" when h divides k).
inline std::string dimension_fraction(std::uint64_t k, std::uint64_t h) {
    const std::uint64_t g = std::gcd(k, h);
    return h / g == 1 ? std::to_string(k / g) : std::to_string(k / g) + "/" + std::to_string(h / g);
}

/// [n, k/h, d]_q^h.
struct AdditiveParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t h = 0;
    std::uint64_t q = 0;
    std::size_t d = 0;

    [[nodiscard]] std::string dim() const { return dimension_fraction(k, h); }
    [[nodiscard]] std::string str() const {
        return "[" + std::to_string(n) + ", " + dim() + ", " + std::to_string(d) + "]_" + std::to_string(q) + "^" +
               std::to_string(h);
    }
};

class AdditiveCode {
   public:
    /// `generator` is over ext.field() = F_{q^h}. Throws RankDeficientCode when the
    /// rows are F_q-dependent, i.e. when v -> vG would not be injective.
    AdditiveCode(Extension ext, Matrix generator) : ext_(std::move(ext)), generator_(std::move(generator)) {
        if (!(generator_.field() == ext_.field())) {
            raise(ErrorCode::FieldMismatch, "generator over " + generator_.field().name() + ", expected " + ext_.field().name());
        }
        if (generator_.rows() == 0 || generator_.cols() == 0) raise(ErrorCode::InvalidParams, "empty generator matrix");
        const std::size_t rk = rank(expanded());
        if (rk != generator_.rows()) {
            raise(ErrorCode::RankDeficientCode, "F_q-rank of the rows is " + std::to_string(rk) + ", expected " +
                                                    std::to_string(generator_.rows()));
        }
    }

    [[nodiscard]] const Extension& extension() const noexcept { return ext_; }
    [[nodiscard]] const Field& base_field() const noexcept { return ext_.base(); }
    [[nodiscard]] const Field& alphabet() const noexcept { return ext_.field(); }
    [[nodiscard]] const Matrix& generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
    [[nodiscard]] std::size_t n() const noexcept { return generator_.cols(); }
    [[nodiscard]] std::size_t h() const noexcept { return ext_.degree(); }
    [[nodiscard]] std::uint64_t q() const noexcept { return ext_.base().order(); }

    /// F_q-combination of the rows; v has length k over F_q.
    [[nodiscard]] Vector codeword(std::span<const Rep> v) const {
        if (v.size() != k()) raise(ErrorCode::DimensionMismatch, "message length " + std::to_string(v.size()));
        Vector lifted(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) lifted[i] = ext_.embed(v[i]);
        return vec_mul(lifted, generator_);
    }

    /// k x nh matrix over F_q: each entry replaced by its h coordinates.
    [[nodiscard]] Matrix expanded() const {
        Matrix out(ext_.base(), k(), n() * h());
        for (std::size_t r = 0; r < k(); ++r) {
            const auto coords = ext_.expand(generator_.row(r));
            for (std::size_t c = 0; c < coords.size(); ++c) out(r, c) = coords[c];
        }
        return out;
    }

    /// Minimum weight over the q^k - 1 nonzero codewords. Only F_q-scalar classes
    /// are deduplicated; F_{q^h}-multiples may have different weights.
    [[nodiscard]] std::size_t min_distance(const Budget& budget = {}, unsigned jobs = 1) const {
        const std::uint64_t total = projective_count(q(), k());
        budget.check(total, "additive minimum distance enumeration");
        std::vector<std::size_t> best(std::max(1u, jobs), n());
        detail::parallel_chunks(total, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
            for (std::uint64_t i = begin; i < end; ++i) {
                best[w] = std::min(best[w], weight(codeword(projective_vector(q(), k(), i))));
            }
        });
        return *std::min_element(best.begin(), best.end());
    }

    [[nodiscard]] AdditiveParams params(const Budget& budget = {}, unsigned jobs = 1) const {
        return {n(), k(), h(), q(), min_distance(budget, jobs)};
    }

   private:
    Extension ext_;
    Matrix generator_;
};

}  // namespace addikit
