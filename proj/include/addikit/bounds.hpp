#pragma once

// Griesmer-type bounds: the classical bound for linear codes, its application to
// generalised Hamming weights, and the additive Griesmer bound for
// [n, r/h, d]_q^h codes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "arith.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace addikit {

namespace detail {

inline void require_prime_power(std::uint64_t q) {
    if (!arith::prime_power(q)) raise(ErrorCode::InvalidParams, "q = " + std::to_string(q) + " is not a prime power");
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// sum_{i<terms} ceil(d / q^i); terms beyond q^i >= d contribute 1 each.
inline std::uint64_t ceiling_sum(std::uint64_t terms, std::uint64_t d, std::uint64_t q) {
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::uint64_t i = 0; i < terms; ++i) {
        if (power >= d) {
            total += terms - i;
            break;
        }
        total += ceil_div(d, power);
        power = (power > UINT64_MAX / q) ? UINT64_MAX : power * q;
    }
    return total;
}

}  // namespace detail

/// Smallest n allowed for a linear [n,k,d]_q code: sum_{i<k} ceil(d/q^i).
inline std::uint64_t griesmer_linear(std::uint64_t k, std::uint64_t d, std::uint64_t q) {
    if (k < 1 || d < 1) raise(ErrorCode::InvalidParams, "griesmer needs k >= 1 and d >= 1");
    detail::require_prime_power(q);
    return detail::ceiling_sum(k, d, q);
}

/// Lower bound on d_j(C) for a code of minimum distance d: a j-dimensional
/// subcode is itself a [.., j, >= d] code, so Griesmer applies to its support.
inline std::uint64_t ghw_lower_bound(std::uint64_t j, std::uint64_t d, std::uint64_t q) {
    if (j < 1 || d < 1) raise(ErrorCode::InvalidParams, "ghw bound needs j >= 1 and d >= 1");
    detail::require_prime_power(q);
    return detail::ceiling_sum(j, d, q);
}

/// Full audit trail of one evaluation of the additive Griesmer bound
///   n >= k + d - m + ceil(d / f(q,m)),
///   f(q,m) = q^E (q^h - 1) / (q^E - 1),  E = (m-2)h + r0.
struct AdditiveGriesmerVerdict {
    std::uint64_t n = 0, r = 0, h = 0, q = 0, d = 0;
    std::uint64_t k = 0;         // ceil(r/h)
    std::uint64_t r0 = 0;        // r = (k-1)h + r0, 1 <= r0 <= h
    std::uint64_t m_window = 0;  // smallest m >= 1 with d <= q^{(m-1)h + r0}
    std::uint64_t m = 0;         // min(m_window, k), the value used in the formula
    std::optional<Rational> f;   // unset when E <= 0 (m = 1): the ceil term is then 0
    std::int64_t ceil_term = 0;
    std::int64_t rhs = 0;
    bool feasible = false;

    [[nodiscard]] std::string convention() const {
        std::string out;
        if (m == 1) out = "m=1: f undefined, ceil(d/f) taken as 0 (Singleton form n >= k + d - 1)";
        if (m_window > k) {
            if (!out.empty()) out += "; ";
            out += "window m=" + std::to_string(m_window) + " exceeds k, clamped to m=k";
        }
        return out;
    }
};

/// Smallest m >= 1 with d <= q^{(m-1)h + r0}.
inline std::uint64_t additive_griesmer_window(std::uint64_t d, std::uint64_t h, std::uint64_t q, std::uint64_t r0) {
    for (std::uint64_t m = 1;; ++m) {
        const auto upper = arith::checked_pow(q, (m - 1) * h + r0);
        if (!upper || d <= *upper) return m;
    }
}

inline AdditiveGriesmerVerdict additive_griesmer_check(std::uint64_t n, std::uint64_t r, std::uint64_t h, std::uint64_t q,
                                                       std::uint64_t d) {
    if (r < 1 || h < 1 || d < 1) raise(ErrorCode::InvalidParams, "additive griesmer needs r, h, d >= 1");
    detail::require_prime_power(q);
    AdditiveGriesmerVerdict v;
    v.n = n;
    v.r = r;
    v.h = h;
    v.q = q;
    v.d = d;
    v.k = detail::ceil_div(r, h);
    v.r0 = r - (v.k - 1) * h;
    v.m_window = additive_griesmer_window(d, h, q, v.r0);
    v.m = std::min(v.m_window, v.k);
    if (v.m >= 2) {
        const std::uint64_t exponent = (v.m - 2) * h + v.r0;
        const auto qe = arith::checked_pow(q, exponent);
        const auto qh = arith::checked_pow(q, h);
        if (!qe || !qh || *qe > INT64_MAX / *qh) raise(ErrorCode::InvalidParams, "f(q,m) overflows 64-bit arithmetic");
        v.f = Rational(static_cast<std::int64_t>(*qe * (*qh - 1)), static_cast<std::int64_t>(*qe - 1));
        v.ceil_term = (Rational(static_cast<std::int64_t>(d)) / *v.f).ceil();
    }
    v.rhs = static_cast<std::int64_t>(v.k + d) - static_cast<std::int64_t>(v.m) + v.ceil_term;
    v.feasible = static_cast<std::int64_t>(n) >= v.rhs;
    return v;
}

/// Largest d the additive Griesmer bound allows for [n, r/h]_q^h; 0 when none.
inline std::uint64_t additive_griesmer_max_d(std::uint64_t n, std::uint64_t r, std::uint64_t h, std::uint64_t q) {
    for (std::uint64_t d = n; d >= 1; --d) {
        if (additive_griesmer_check(n, r, h, q, d).feasible) return d;
    }
    return 0;
}

}  // namespace addikit
