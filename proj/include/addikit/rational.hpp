#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace addikit {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) {  // NOLINT(google-explicit-constructor)
        if (den == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] std::int64_t ceil() const noexcept {
        const std::int64_t q = num_ / den_;
        return (num_ % den_ > 0) ? q + 1 : q;
    }
    [[nodiscard]] std::int64_t floor() const noexcept {
        const std::int64_t q = num_ / den_;
        return (num_ % den_ < 0) ? q - 1 : q;
    }

    [[nodiscard]] std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) { return mul(a.num_, b.num_, a.den_, b.den_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) raise(ErrorCode::DivisionByZero, "rational division by zero");
        return mul(a.num_, b.den_, a.den_, b.num_);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        const __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return narrow(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

   private:
    static Rational mul(std::int64_t n1, std::int64_t n2, std::int64_t d1, std::int64_t d2) {
        return narrow(static_cast<__int128>(n1) * n2, static_cast<__int128>(d1) * d2);
    }
    static Rational narrow(__int128 n, __int128 d) {
        __int128 a = n < 0 ? -n : n, b = d < 0 ? -d : d;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || n < -kMax || d > kMax || d < -kMax) raise(ErrorCode::InvalidParams, "rational overflow");
        return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace addikit
