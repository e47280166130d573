#pragma once

// Finite fields F_{p^m} with a canonical primitive modulus.
//
// Elements are integers in [0, p^m) whose base-p digits (little-endian) are the
// coefficients of the residue polynomial. Multiplication goes through log/exp
// tables built from the class of x, which generates the multiplicative group
// because the modulus is primitive.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace addikit {

using Rep = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 24;

namespace detail {

// Dense polynomials over F_p, little-endian, no trailing zeros (zero poly is empty).
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * base % mod);
        base = static_cast<std::uint64_t>((unsigned __int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

// Remainder of a modulo monic f.
inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    poly_trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * f[i]) % p);
        }
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(c), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
    Poly r = poly_mod(Poly{1}, f, p);
    base = poly_mod(std::move(base), f, p);
    while (exp > 0) {
        if (exp & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = *arith::checked_pow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// x generates (F_p[x]/f)^* iff x^{(p^m-1)/r} != 1 for every prime r | p^m - 1.
inline bool poly_is_primitive(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (f[0] == 0) return false;
    if (!poly_is_irreducible(f, p)) return false;
    const std::uint64_t order = *arith::checked_pow(p, m) - 1;
    const Poly one{1};
    for (const auto r : arith::prime_divisors(order)) {
        if (poly_powmod(Poly{0, 1}, order / r, f, p) == poly_mod(one, f, p)) return false;
    }
    return true;
}

/// Lexicographically smallest monic primitive polynomial of degree m, comparing
/// coefficient lists from the constant term upward.
inline std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t m) {
    const std::uint64_t count = *arith::checked_pow(p, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        std::uint64_t t = idx;
        // Big-endian digits of idx give (c_0, ..., c_{m-1}) so c_0 varies slowest.
        for (std::uint32_t i = m; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (poly_is_primitive(f, p)) return f;
    }
    raise(ErrorCode::InternalInconsistency, "no primitive polynomial of degree " + std::to_string(m) + " over F_" +
                                                std::to_string(p));
}

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> digit_weight;  // p^i
    std::vector<Rep> exp;                     // exp[i] = g^i, length 2(order-1) so log sums need no reduction
    std::vector<std::uint32_t> log;           // log[0] unused
    std::vector<Rep> neg;
    std::vector<Rep> add_table;               // order^2 entries for small non-prime, odd-characteristic fields
};

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t m) {
    auto data = std::make_shared<FieldData>();
    data->p = p;
    data->m = m;
    data->order = static_cast<std::uint32_t>(*arith::checked_pow(p, m));
    data->modulus = canonical_modulus(p, m);
    data->digit_weight.resize(m);
    for (std::uint32_t i = 0, w = 1; i < m; ++i, w *= p) data->digit_weight[i] = w;

    const std::uint32_t q = data->order;
    const std::uint32_t unit_order = q - 1;
    data->log.assign(q, 0);
    data->exp.assign(2 * static_cast<std::size_t>(unit_order), 0);

    // Walk the powers of x in digit form: multiply by x, reduce with the modulus.
    std::vector<std::uint32_t> digits(m, 0);
    digits[0] = 1;
    for (std::uint32_t i = 0; i < unit_order; ++i) {
        Rep rep = 0;
        for (std::uint32_t j = 0; j < m; ++j) rep += digits[j] * data->digit_weight[j];
        data->exp[i] = rep;
        data->exp[i + unit_order] = rep;
        data->log[rep] = i;
        const std::uint32_t top = digits[m - 1];
        for (std::uint32_t j = m; j-- > 1;) digits[j] = digits[j - 1];
        digits[0] = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            digits[j] = static_cast<std::uint32_t>((digits[j] + static_cast<std::uint64_t>(p - top) * data->modulus[j]) % p);
        }
    }

    data->neg.resize(q);
    for (Rep a = 0; a < q; ++a) {
        Rep r = 0;
        Rep t = a;
        for (std::uint32_t j = 0; j < m; ++j) {
            const std::uint32_t d = t % p;
            t /= p;
            r += ((p - d) % p) * data->digit_weight[j];
        }
        data->neg[a] = r;
    }

    if (p != 2 && m > 1 && q <= 256) {
        data->add_table.resize(static_cast<std::size_t>(q) * q);
        for (Rep a = 0; a < q; ++a) {
            for (Rep b = 0; b < q; ++b) {
                Rep r = 0, x = a, y = b;
                for (std::uint32_t j = 0; j < m; ++j) {
                    r += ((x % p + y % p) % p) * data->digit_weight[j];
                    x /= p;
                    y /= p;
                }
                data->add_table[static_cast<std::size_t>(a) * q + b] = r;
            }
        }
    }
    return data;
}

}  // namespace detail

class FieldElement;

/// Handle to an immutable canonical field. Copies share the same tables, and
/// two fields created with the same (p, m) compare equal.
class Field {
   public:
    Field() = default;

    /// Canonical F_{p^m}. Throws NonPrimeCharacteristic or FieldTooLarge.
    static Field create(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap = kDefaultFieldCap) {
        if (!arith::is_prime(p)) raise(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
        if (m == 0) raise(ErrorCode::InvalidParams, "extension degree must be at least 1");
        const auto order = arith::checked_pow(p, m);
        if (!order || *order > size_cap || *order > (std::uint64_t{1} << 31)) {
            raise(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds the field size cap " +
                                                std::to_string(size_cap));
        }
        static std::mutex mutex;
        static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
        std::lock_guard lock(mutex);
        auto& slot = cache[{p, m}];
        if (!slot) slot = detail::build_field(p, m);
        return Field(slot);
    }

    /// Field with q elements, q a prime power.
    static Field with_order(std::uint64_t q, std::uint64_t size_cap = kDefaultFieldCap) {
        const auto pm = arith::prime_power(q);
        if (!pm) raise(ErrorCode::InvalidParams, std::to_string(q) + " is not a prime power");
        return create(pm->first, pm->second, size_cap);
    }

    [[nodiscard]] bool valid() const noexcept { return data_ != nullptr; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return data_->p; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return data_->m; }
    [[nodiscard]] std::uint32_t order() const noexcept { return data_->order; }
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

    /// The class of x; generates the multiplicative group.
    [[nodiscard]] Rep generator() const noexcept { return data_->exp[data_->order > 2 ? 1 : 0]; }

    [[nodiscard]] bool contains(std::uint64_t rep) const noexcept { return rep < data_->order; }

    [[nodiscard]] Rep add(Rep a, Rep b) const noexcept {
        const auto& d = *data_;
        if (d.p == 2) return a ^ b;
        if (d.m == 1) {
            const Rep s = a + b;
            return s >= d.p ? s - d.p : s;
        }
        if (!d.add_table.empty()) return d.add_table[static_cast<std::size_t>(a) * d.order + b];
        Rep r = 0;
        for (std::uint32_t j = 0; j < d.m; ++j) {
            r += ((a % d.p + b % d.p) % d.p) * d.digit_weight[j];
            a /= d.p;
            b /= d.p;
        }
        return r;
    }
    [[nodiscard]] Rep neg(Rep a) const noexcept { return data_->neg[a]; }
    [[nodiscard]] Rep sub(Rep a, Rep b) const noexcept { return add(a, neg(b)); }
    [[nodiscard]] Rep mul(Rep a, Rep b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return data_->exp[data_->log[a] + data_->log[b]];
    }
    [[nodiscard]] Rep inv(Rep a) const {
        if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero");
        const std::uint32_t u = data_->order - 1;
        return data_->exp[(u - data_->log[a]) % u];
    }
    [[nodiscard]] Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
    [[nodiscard]] Rep pow(Rep a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t u = data_->order - 1;
        return data_->exp[static_cast<std::size_t>(static_cast<std::uint64_t>(data_->log[a]) * (e % u) % u)];
    }
    /// g^e for the canonical generator g.
    [[nodiscard]] Rep exp(std::uint64_t e) const noexcept { return data_->exp[e % (data_->order - 1)]; }
    /// Discrete log to base g; a must be nonzero.
    [[nodiscard]] std::uint32_t log(Rep a) const {
        if (a == 0) raise(ErrorCode::DivisionByZero, "logarithm of zero");
        return data_->log[a];
    }
    /// Multiplicative order of a nonzero element.
    [[nodiscard]] std::uint64_t multiplicative_order(Rep a) const {
        const std::uint64_t u = data_->order - 1;
        return u / arith::gcd(u, log(a));
    }

    /// Embeds an integer of the prime field (taken mod p).
    [[nodiscard]] Rep from_integer(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(data_->p);
        return static_cast<Rep>(((v % p) + p) % p);
    }

    /// Little-endian base-p digits of rep, i.e. the residue polynomial coefficients.
    [[nodiscard]] std::vector<std::uint32_t> digits(Rep a) const {
        std::vector<std::uint32_t> out(data_->m);
        for (auto& d : out) {
            d = a % data_->p;
            a /= data_->p;
        }
        return out;
    }

    [[nodiscard]] FieldElement element(Rep rep) const;
    [[nodiscard]] FieldElement zero() const;
    [[nodiscard]] FieldElement one() const;

    [[nodiscard]] std::string name() const {
        return data_->m == 1 ? "F_" + std::to_string(data_->p)
                             : "F_" + std::to_string(data_->p) + "^" + std::to_string(data_->m);
    }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->m == b.data_->m;
    }

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// Element bound to its field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
   public:
    FieldElement(Field field, Rep rep) : field_(std::move(field)), rep_(rep) {
        if (!field_.contains(rep)) {
            raise(ErrorCode::InvalidParams, "rep " + std::to_string(rep) + " outside " + field_.name());
        }
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] Rep rep() const noexcept { return rep_; }
    [[nodiscard]] bool is_zero() const noexcept { return rep_ == 0; }

    [[nodiscard]] FieldElement inv() const { return {field_, field_.inv(rep_)}; }
    [[nodiscard]] FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(rep_, e)}; }
    FieldElement operator-() const { return {field_, field_.neg(rep_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.add(a.rep_, b.rep_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.sub(a.rep_, b.rep_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.mul(a.rep_, b.rep_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.div(a.rep_, b.rep_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.rep_ == b.rep_;
    }

   private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_)) raise(ErrorCode::FieldMismatch, a.field_.name() + " vs " + b.field_.name());
    }

    Field field_;
    Rep rep_;
};

inline FieldElement Field::element(Rep rep) const { return {*this, rep}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

}  // namespace addikit
