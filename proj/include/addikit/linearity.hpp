#pragma once

// One-directional certificate that an additive code is not equivalent to an
// F_{q^h}-linear code: members of a Desarguesian spread span subspaces whose
// F_q-rank is a multiple of h, so any union of members with rank not divisible
// by h rules linearity out.

#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "budget.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "subspace_family.hpp"

namespace addikit {

/// st + s + 1 = s(t+1) + 1 must be divisible by h for an F_{q^h}-linear equivalent to exist.
inline bool divisibility_precheck(std::uint64_t s, std::uint64_t t, std::uint64_t h) {
    if (h == 0) raise(ErrorCode::InvalidParams, "h must be positive");
    return (s * (t + 1) + 1) % h == 0;
}

/// F_q-rank of the span of the chosen members.
inline std::size_t union_rank(const SubspaceFamily& family, std::span<const std::size_t> indices) {
    return rank(family.stacked(indices));
}

enum class LinearityVerdict { Nonlinear, Inconclusive };

enum class CertificateReason {
    Dimension,     // total F_q-rank not divisible by h
    RankWitness,   // a union of members with rank not divisible by h
    None,
};

struct NonlinearityCertificate {
    LinearityVerdict verdict = LinearityVerdict::Inconclusive;
    CertificateReason reason = CertificateReason::None;
    std::size_t h = 0;
    std::size_t total_rank = 0;
    std::vector<std::size_t> witness;  // member indices, ascending
    std::size_t rank = 0;              // union rank of the witness
    std::size_t max_m = 0;
    std::uint64_t subsets_checked = 0;

    [[nodiscard]] std::string verdict_name() const {
        return verdict == LinearityVerdict::Nonlinear ? "nonlinear" : "inconclusive";
    }
    [[nodiscard]] std::string reason_name() const {
        switch (reason) {
            case CertificateReason::Dimension: return "dimension";
            case CertificateReason::RankWitness: return "rank-witness";
            case CertificateReason::None: return "none";
        }
        return "none";
    }
};

namespace detail {

// Calls visit(combo) for m-subsets of {0..n-1} whose first element lies in
// [first_begin, first_end), lexicographically. Stops when visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t m, std::size_t first_begin, std::size_t first_end, Visit&& visit) {
    if (m == 0 || m > n) return false;
    std::vector<std::size_t> combo(m);
    for (std::size_t first = first_begin; first < first_end && first + m <= n; ++first) {
        combo[0] = first;
        for (std::size_t i = 1; i < m; ++i) combo[i] = first + i;
        while (true) {
            if (visit(static_cast<const std::vector<std::size_t>&>(combo))) return true;
            std::size_t i = m;
            while (i > 1 && combo[i - 1] == n - m + i - 1) --i;
            if (i == 1) break;
            ++combo[i - 1];
            for (std::size_t r = i; r < m; ++r) combo[r] = combo[r - 1] + 1;
        }
    }
    return false;
}

}  // namespace detail

/// Searches subsets of size 2..max_m in lexicographic order and returns the first
/// whose union rank is not a multiple of h. Skipped when the total rank already
/// is not a multiple of h. Inconclusive is not a proof of linearity.
inline NonlinearityCertificate certify_nonlinear(const SubspaceFamily& family, std::size_t max_m = 3,
                                                 const Budget& budget = {}, unsigned jobs = 1) {
    if (max_m < 2) raise(ErrorCode::InvalidParams, "max_m must be at least 2");
    NonlinearityCertificate cert;
    cert.h = family.h;
    cert.max_m = max_m;
    std::vector<std::size_t> all(family.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    cert.total_rank = rank(family.stacked(all));
    if (cert.total_rank % family.h != 0) {
        cert.verdict = LinearityVerdict::Nonlinear;
        cert.reason = CertificateReason::Dimension;
        return cert;
    }

    std::uint64_t subsets = 0;
    for (std::size_t m = 2; m <= max_m; ++m) {
        const std::uint64_t c = arith::binomial(family.size(), m);
        subsets = (subsets > UINT64_MAX - c) ? UINT64_MAX : subsets + c;
    }
    budget.check(subsets, "subset search");

    const std::size_t n = family.size();
    for (std::size_t m = 2; m <= max_m; ++m) {
        // Workers own contiguous ranges of the leading index; the smallest
        // leading index with a witness wins, so the result matches jobs = 1.
        jobs = std::max(1u, jobs);
        std::vector<std::vector<std::size_t>> found(jobs);
        std::vector<std::size_t> found_rank(jobs, 0);
        std::vector<std::uint64_t> checked(jobs, 0);
        std::atomic<std::size_t> best_first{std::numeric_limits<std::size_t>::max()};
        detail::parallel_chunks(n, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
            detail::for_each_combination(n, m, begin, end, [&](const std::vector<std::size_t>& combo) {
                if (combo[0] > best_first.load()) return true;
                ++checked[w];
                const std::size_t rk = union_rank(family, combo);
                if (rk % family.h == 0) return false;
                found[w] = combo;
                found_rank[w] = rk;
                std::size_t current = best_first.load();
                while (combo[0] < current && !best_first.compare_exchange_weak(current, combo[0])) {
                }
                return true;
            });
        });
        for (const auto x : checked) cert.subsets_checked += x;
        for (unsigned w = 0; w < jobs; ++w) {
            if (!found[w].empty()) {
                cert.verdict = LinearityVerdict::Nonlinear;
                cert.reason = CertificateReason::RankWitness;
                cert.witness = found[w];
                cert.rank = found_rank[w];
                return cert;
            }
        }
    }
    return cert;
}

}  // namespace addikit
