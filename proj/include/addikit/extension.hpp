#pragma once

// Subfield embeddings K -> L, trace and norm, and coordinates of L over K.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace addikit {

/// A field L viewed as an extension of a subfield K. The embedding sends the
/// canonical generator of K to g_L^{j (|L|-1)/(|K|-1)} for the smallest j
/// coprime to |K|-1 that makes the map additive.
class Extension {
   public:
    Extension() = default;

    Extension(Field base, Field field) : base_(std::move(base)), field_(std::move(field)) {
        if (base_.characteristic() != field_.characteristic() || field_.degree() % base_.degree() != 0) {
            raise(ErrorCode::NotASubfield, base_.name() + " is not a subfield of " + field_.name());
        }
        degree_ = field_.degree() / base_.degree();
        const std::uint64_t base_units = base_.order() - 1;
        const std::uint64_t field_units = field_.order() - 1;
        ratio_ = field_units / base_units;
        bool found = false;
        for (std::uint64_t j = 1; j <= base_units && !found; ++j) {
            if (arith::gcd(j, base_units) != 1) continue;
            multiplier_ = j;
            found = additive();
        }
        if (!found) raise(ErrorCode::InternalInconsistency, "no additive embedding of " + base_.name() + " into " + field_.name());
        finish();
    }

    /// K -> M -> L as a single extension K -> L.
    static Extension compose(const Extension& inner, const Extension& outer) {
        if (!(inner.field_ == outer.base_)) {
            raise(ErrorCode::NotASubfield, "cannot compose " + inner.field_.name() + " with " + outer.base_.name());
        }
        Extension e;
        e.base_ = inner.base_;
        e.field_ = outer.field_;
        e.degree_ = inner.degree_ * outer.degree_;
        e.ratio_ = inner.ratio_ * outer.ratio_;
        e.multiplier_ = (inner.multiplier_ * outer.multiplier_) % (e.base_.order() - 1);
        if (e.multiplier_ == 0) e.multiplier_ = 1;  // |K| = 2
        if (!e.additive()) raise(ErrorCode::InternalInconsistency, "composed embedding is not additive");
        e.finish();
        return e;
    }

    [[nodiscard]] const Field& base() const noexcept { return base_; }
    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }

    [[nodiscard]] Rep embed(Rep k) const {
        if (k == 0) return 0;
        const std::uint64_t units = field_.order() - 1;
        const std::uint64_t e = (static_cast<std::uint64_t>(base_.log(k)) * multiplier_ % units) * ratio_ % units;
        return field_.exp(e);
    }

    [[nodiscard]] bool contains(Rep l) const {
        return l == 0 || field_.log(l) % ratio_ == 0;
    }

    /// Preimage of an element of the embedded subfield.
    [[nodiscard]] Rep restrict(Rep l) const {
        if (l == 0) return 0;
        const std::uint64_t e = field_.log(l);
        if (e % ratio_ != 0) {
            raise(ErrorCode::ResultNotInSubfield, std::to_string(l) + " of " + field_.name() + " is outside " + base_.name());
        }
        const std::uint64_t base_units = base_.order() - 1;
        return base_.exp((e / ratio_) % base_units * multiplier_inverse_ % base_units);
    }

    /// Sum of the conjugates x^{|K|^i}, i < [L:K], pulled back to K.
    [[nodiscard]] Rep trace(Rep l) const {
        Rep sum = 0;
        Rep y = l;
        for (std::uint32_t i = 0; i < degree_; ++i) {
            sum = field_.add(sum, y);
            y = field_.pow(y, base_.order());
        }
        return restrict(sum);
    }

    /// x^{(|L|-1)/(|K|-1)} pulled back to K.
    [[nodiscard]] Rep norm(Rep l) const { return restrict(field_.pow(l, ratio_)); }

    /// i-th element x^i of the polynomial basis of L over K.
    [[nodiscard]] Rep basis(std::uint32_t i) const { return field_.pow(degree_ > 1 ? field_.characteristic() : 1, i); }

    /// Coordinates of l over K in the polynomial basis.
    [[nodiscard]] Vector coordinates(Rep l) const {
        Vector t(degree_);
        for (std::uint32_t k = 0; k < degree_; ++k) t[k] = trace(field_.mul(l, basis(k)));
        return vec_mul(t, gram_inverse_);
    }

    [[nodiscard]] Rep combine(std::span<const Rep> coords) const {
        if (coords.size() != degree_) raise(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
        Rep l = 0;
        for (std::uint32_t i = 0; i < degree_; ++i) l = field_.add(l, field_.mul(embed(coords[i]), basis(i)));
        return l;
    }

    /// Coordinates of a list of L-elements, concatenated.
    [[nodiscard]] Vector expand(std::span<const Rep> values) const {
        Vector out;
        out.reserve(values.size() * degree_);
        for (const Rep v : values) {
            const auto c = coordinates(v);
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    }

    /// True iff the elements are linearly independent over K.
    [[nodiscard]] bool independent(std::span<const Rep> elements) const {
        if (elements.empty()) return true;
        Matrix m(base_, elements.size(), degree_);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const auto c = coordinates(elements[i]);
            for (std::uint32_t j = 0; j < degree_; ++j) m(i, j) = c[j];
        }
        return rank(m) == elements.size();
    }

   private:
    // A multiplicative map fixing 1 is additive iff phi(c + 1) = phi(c) + 1 for all c.
    [[nodiscard]] bool additive() const {
        for (Rep c = 0; c < base_.order(); ++c) {
            if (embed(base_.add(c, 1)) != field_.add(embed(c), 1)) return false;
        }
        return true;
    }

    void finish() {
        multiplier_inverse_ = arith::mod_inverse(multiplier_ % (base_.order() - 1), base_.order() - 1);
        if (base_.order() == 2) multiplier_inverse_ = 0;
        Matrix gram(base_, degree_, degree_);
        for (std::uint32_t i = 0; i < degree_; ++i)
            for (std::uint32_t k = 0; k < degree_; ++k) gram(i, k) = trace(field_.mul(basis(i), basis(k)));
        gram_inverse_ = inverse(gram);
    }

    Field base_;
    Field field_;
    std::uint32_t degree_ = 1;
    std::uint64_t ratio_ = 1;
    std::uint64_t multiplier_ = 1;
    std::uint64_t multiplier_inverse_ = 1;
    Matrix gram_inverse_;
};

/// The tower F_q in F_{q^s} in F_{q^{st}} together with the alphabet F_{q^h}.
/// F_q -> F_{q^{st}} is the composite of the two tower steps so every map commutes.
class TowerContext {
   public:
    TowerContext(Field fq, std::uint32_t s, std::uint32_t t, std::uint32_t h, std::uint64_t size_cap = kDefaultFieldCap)
        : s_(s), t_(t), h_(h) {
        if (s == 0 || t == 0 || h == 0) raise(ErrorCode::InvalidParams, "s, t and h must be positive");
        const std::uint32_t p = fq.characteristic();
        const std::uint32_t m = fq.degree();
        const Field fqs = Field::create(p, m * s, size_cap);
        const Field fqst = Field::create(p, m * s * t, size_cap);
        const Field fqh = Field::create(p, m * h, size_cap);
        q_s_ = Extension(fq, fqs);
        s_st_ = Extension(fqs, fqst);
        q_st_ = Extension::compose(q_s_, s_st_);
        q_h_ = Extension(fq, fqh);
        for (std::uint32_t j = 0; j < h; ++j) alphabet_basis_.push_back(q_h_.basis(j));
    }

    static TowerContext for_q(std::uint64_t q, std::uint32_t s, std::uint32_t t, std::uint32_t h) {
        return {Field::with_order(q), s, t, h};
    }

    [[nodiscard]] std::uint32_t s() const noexcept { return s_; }
    [[nodiscard]] std::uint32_t t() const noexcept { return t_; }
    [[nodiscard]] std::uint32_t h() const noexcept { return h_; }
    [[nodiscard]] std::uint64_t q() const noexcept { return fq().order(); }

    [[nodiscard]] const Field& fq() const noexcept { return q_s_.base(); }
    [[nodiscard]] const Field& fqs() const noexcept { return q_s_.field(); }
    [[nodiscard]] const Field& fqst() const noexcept { return s_st_.field(); }
    [[nodiscard]] const Field& fqh() const noexcept { return q_h_.field(); }

    [[nodiscard]] const Extension& q_to_s() const noexcept { return q_s_; }
    [[nodiscard]] const Extension& s_to_st() const noexcept { return s_st_; }
    [[nodiscard]] const Extension& q_to_st() const noexcept { return q_st_; }
    [[nodiscard]] const Extension& q_to_h() const noexcept { return q_h_; }

    /// e_1..e_h; the polynomial basis unless replaced.
    [[nodiscard]] const Vector& alphabet_basis() const noexcept { return alphabet_basis_; }

    /// Replaces e_1..e_h. Throws InvalidParams unless they form an F_q-basis of F_{q^h}.
    void set_alphabet_basis(Vector basis) {
        if (basis.size() != h_ || !q_h_.independent(basis)) {
            raise(ErrorCode::InvalidParams, "alphabet basis must be " + std::to_string(h_) + " F_q-independent elements");
        }
        alphabet_basis_ = std::move(basis);
    }

    /// tr: F_{q^s} -> F_q.
    [[nodiscard]] Rep tr(Rep x) const { return q_s_.trace(x); }
    /// Tr: F_{q^{st}} -> F_q.
    [[nodiscard]] Rep Tr(Rep x) const { return q_st_.trace(x); }
    /// N: F_{q^{st}} -> F_{q^s}.
    [[nodiscard]] Rep norm(Rep x) const { return s_st_.norm(x); }

   private:
    std::uint32_t s_, t_, h_;
    Extension q_s_, s_st_, q_st_, q_h_;
    Vector alphabet_basis_;
};

}  // namespace addikit
