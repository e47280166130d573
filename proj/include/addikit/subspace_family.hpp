#pragma once

// A list of rank-h F_q-subspaces of F_q^k. Each member yields one column
// e_1 g_1 + ... + e_h g_h of an additive generator matrix.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "additive_code.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "matrix.hpp"

namespace addikit {

struct SubspaceFamily {
    Field field;
    std::size_t ambient_dim = 0;
    std::size_t h = 0;
    /// Member i as an h x ambient_dim matrix of generators g_1..g_h (rows).
    std::vector<Matrix> members;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }

    /// Stacks all generators of the chosen members into one matrix.
    [[nodiscard]] Matrix stacked(std::span<const std::size_t> indices) const {
        Matrix out(field, 0, ambient_dim);
        for (const auto i : indices) {
            if (i >= members.size()) {
                raise(ErrorCode::IndexOutOfRange, "member " + std::to_string(i) + " of " + std::to_string(members.size()));
            }
            for (std::size_t r = 0; r < members[i].rows(); ++r) out.append_row(members[i].row(r));
        }
        return out;
    }
};

/// Generator matrix over F_{q^h} with column i = sum_j e_j g_j(i).
inline Matrix family_generator(const SubspaceFamily& family, const Extension& q_to_h, std::span<const Rep> basis) {
    if (basis.size() != family.h || q_to_h.degree() != family.h) {
        raise(ErrorCode::DimensionMismatch, "alphabet basis size differs from member rank");
    }
    if (!(q_to_h.base() == family.field)) raise(ErrorCode::FieldMismatch, "family field differs from extension base");
    const Field& L = q_to_h.field();
    Matrix g(L, family.ambient_dim, family.size());
    for (std::size_t col = 0; col < family.size(); ++col) {
        const Matrix& member = family.members[col];
        for (std::size_t r = 0; r < family.ambient_dim; ++r) {
            Rep entry = 0;
            for (std::size_t j = 0; j < family.h; ++j) entry = L.add(entry, L.mul(basis[j], q_to_h.embed(member(j, r))));
            g(r, col) = entry;
        }
    }
    return g;
}

inline AdditiveCode additive_code_from_family(const SubspaceFamily& family, const Extension& q_to_h,
                                              std::span<const Rep> basis) {
    return AdditiveCode(q_to_h, family_generator(family, q_to_h, basis));
}

/// Members { c y_i : c in F_{q^h} } for the columns y_i of a generator matrix of
/// an F_{q^h}-linear code, coordinatised over F_q. These lie in a Desarguesian spread.
inline SubspaceFamily linear_code_family(const Matrix& generator, const Extension& q_to_h) {
    if (!(generator.field() == q_to_h.field())) raise(ErrorCode::FieldMismatch, "generator must be over F_{q^h}");
    const std::size_t h = q_to_h.degree();
    SubspaceFamily family{q_to_h.base(), generator.rows() * h, h, {}};
    const Field& L = q_to_h.field();
    for (std::size_t c = 0; c < generator.cols(); ++c) {
        Matrix member(q_to_h.base(), h, family.ambient_dim);
        for (std::size_t j = 0; j < h; ++j) {
            Vector scaled_column(generator.rows());
            for (std::size_t r = 0; r < generator.rows(); ++r) scaled_column[r] = L.mul(q_to_h.basis(j), generator(r, c));
            const auto coords = q_to_h.expand(scaled_column);
            for (std::size_t i = 0; i < coords.size(); ++i) member(j, i) = coords[i];
        }
        family.members.push_back(std::move(member));
    }
    return family;
}

}  // namespace addikit
