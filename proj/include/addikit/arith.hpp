#pragma once

// Integer helpers shared by the field engine and the bound calculators.

#include <cstdint>
#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace addikit::arith {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
        result *= base;
    }
    return result;
}

/// Splits q = p^m. Returns nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto primes = prime_divisors(q);
    if (primes.size() != 1) return std::nullopt;
    std::uint32_t m = 0;
    while (q > 1) {
        q /= primes[0];
        ++m;
    }
    return std::pair{static_cast<std::uint32_t>(primes[0]), m};
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Inverse of a modulo n; a and n must be coprime.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        const std::int64_t quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/// Number of j-dimensional subspaces of F_q^k, saturating at UINT64_MAX.
inline std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t k, std::uint64_t j) {
    if (j > k) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // Product over i < j of (q^{k-i} - 1) / (q^{i+1} - 1), exact at every prefix.
    unsigned __int128 r = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        const auto num = checked_pow(q, k - i);
        const auto den = checked_pow(q, i + 1);
        if (!num || !den) return kMax;
        r *= (*num - 1);
        if (r > kMax) return kMax;
        r /= (*den - 1);
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace addikit::arith
